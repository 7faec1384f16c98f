// Command-line front end: solve the cut-covering LP, round fractional
// points, run the two-arborescence baseline and the exact search, generate
// instance corpora and benchmark over them.
//
// Exit codes: 0 success, 1 usage or input errors, 2 infeasible instance.

#include "CLI11.hpp"

#include "wmscss/arborescence.hpp"
#include "wmscss/exact.hpp"
#include "wmscss/graph_io.hpp"
#include "wmscss/instances.hpp"
#include "wmscss/lp.hpp"
#include "wmscss/rounding.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>

namespace fs = std::filesystem;
using namespace wmscss;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitInfeasible = 2;

void print_cut(std::ostream& out, const CutCertificate& cut) {
    out << "value " << to_string(cut.value) << " side ";
    auto members = cut.side.members();
    for (std::size_t i = 0; i < members.size(); ++i)
        out << (i ? "," : "") << members[i];
    out << " arcs ";
    for (std::size_t i = 0; i < cut.crossing_arcs.size(); ++i)
        out << (i ? "," : "") << cut.crossing_arcs[i];
    out << '\n';
}

int report_infeasible(const InfeasibleError& e) {
    std::cerr << "infeasible: " << e.what() << '\n' << "cut ";
    print_cut(std::cerr, e.cut());
    return kExitInfeasible;
}

void print_rounding_report(const RoundingReport& r) {
    std::cout << "root " << r.root << '\n'
              << "alpha " << r.in_support_size << '\n'
              << "beta " << r.out_support_size << '\n'
              << "pair " << r.chosen_pair.first << ' ' << r.chosen_pair.second << '\n'
              << "f " << to_string(r.f) << '\n'
              << "w_x " << to_string(r.lp_weight) << '\n'
              << "bound " << to_string(r.bound) << " (" << to_decimal(r.bound) << ")\n"
              << "expected_union_cost " << to_string(r.expected_union_cost) << " ("
              << to_decimal(r.expected_union_cost) << ")\n"
              << "solution_weight " << to_string(r.solution_weight) << " ("
              << to_decimal(r.solution_weight) << ")\n"
              << "solution_arcs";
    for (int id : r.solution_arcs) std::cout << ' ' << id;
    std::cout << '\n';
}

int run_lp(const std::string& graph_file) {
    auto g = read_graph_file(graph_file);
    auto lp = solve_wmscss_lp(g);
    std::cout << "objective " << to_string(lp.objective) << '\n';
    for (int id = 0; id < g.arc_count(); ++id)
        std::cout << "x " << id << ' ' << to_string(lp.solution.value(id)) << '\n';
    std::cout << "cuts " << lp.generated_cuts.size() << '\n';
    for (std::size_t i = 0; i < lp.generated_cuts.size(); ++i) {
        std::cout << "cut " << i << ' ';
        print_cut(std::cout, lp.generated_cuts[i]);
    }
    return kExitOk;
}

int run_round(const std::string& graph_file, const std::optional<std::string>& x_file,
              std::optional<int> root, bool sweep_roots, bool pad, bool assert_bound) {
    auto g = read_graph_file(graph_file);
    if (root && (*root < 0 || *root >= g.vertex_count())) {
        std::cerr << "error: root " << *root << " out of range for " << g.vertex_count()
                  << " vertices\n";
        return kExitUsage;
    }

    std::optional<FractionalSolution> x;
    if (x_file) {
        auto raw = read_solution_file(*x_file, g.arc_count());
        x = truncate_to_box(g, raw);
        auto check = check_wmscss_feasible(g, *x);
        if (!check.feasible) {
            std::cerr << "infeasible: point violates the cut-covering LP\ncut ";
            print_cut(std::cerr, *check.violated);
            return kExitInfeasible;
        }
    } else {
        x = solve_wmscss_lp(g).solution;
    }

    std::optional<RoundingReport> best;
    std::vector<int> roots;
    if (sweep_roots)
        for (int r = 0; r < g.vertex_count(); ++r) roots.push_back(r);
    else
        roots.push_back(root.value_or(0));
    for (int r : roots) {
        auto report = round_min_pair(g, *x, r, pad);
        if (!best || report.solution_weight < best->solution_weight) best = std::move(report);
    }
    print_rounding_report(*best);

    if (assert_bound) {
        auto violation = certify_bound(g, *x, *best);
        if (violation) {
            std::cerr << "certification failed: " << *violation << '\n';
            return kExitUsage;
        }
        std::cout << "certified ok\n";
    }
    return kExitOk;
}

int run_approx2(const std::string& graph_file, std::optional<int> root, bool sweep_roots) {
    auto g = read_graph_file(graph_file);
    if (root && (*root < 0 || *root >= g.vertex_count())) {
        std::cerr << "error: root " << *root << " out of range\n";
        return kExitUsage;
    }
    std::optional<TwoApproxResult> best;
    int best_root = 0;
    std::vector<int> roots;
    if (sweep_roots)
        for (int r = 0; r < g.vertex_count(); ++r) roots.push_back(r);
    else
        roots.push_back(root.value_or(0));
    for (int r : roots) {
        auto result = frederickson_two_approx(g, r);
        if (!best || result.weight < best->weight) {
            best = std::move(result);
            best_root = r;
        }
    }
    std::cout << "root " << best_root << '\n'
              << "in_cost " << to_string(g.total_weight(best->in_tree.arcs)) << '\n'
              << "out_cost " << to_string(g.total_weight(best->out_tree.arcs)) << '\n'
              << "weight " << to_string(best->weight) << " (" << to_decimal(best->weight)
              << ")\n"
              << "arcs";
    for (int id : best->arcs) std::cout << ' ' << id;
    std::cout << '\n';
    return kExitOk;
}

int run_exact(const std::string& graph_file, int max_arcs) {
    auto g = read_graph_file(graph_file);
    auto r = exact_opt(g, max_arcs);
    std::cout << "opt " << to_string(r.weight) << " (" << to_decimal(r.weight) << ")\n"
              << "arcs";
    for (int id : r.arcs) std::cout << ' ' << id;
    std::cout << '\n';
    return kExitOk;
}

struct GenOptions {
    std::string family;
    std::string out_dir;
    std::uint64_t seed = 0;
    int n = 5;
    int m = 10;
    int count = 10;
    std::string weight = "1";
    std::string wmin = "1";
    std::string wmax = "10";
    int max_den = 4;
    std::string base = "cycle";
};

std::vector<std::pair<int, int>> base_edges(const std::string& shape, int n) {
    std::vector<std::pair<int, int>> edges;
    if (shape == "path") {
        for (int v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    } else if (shape == "cycle") {
        for (int v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    } else if (shape == "star") {
        for (int v = 1; v < n; ++v) edges.emplace_back(0, v);
    } else if (shape == "complete") {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
    } else {
        throw std::runtime_error("unknown base shape '" + shape + "'");
    }
    return edges;
}

std::string instance_name(int index) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "inst_%03d", index);
    return buf;
}

int run_gen(const GenOptions& opt) {
    auto weight = parse_rational(opt.weight);
    auto wmin = parse_rational(opt.wmin);
    auto wmax = parse_rational(opt.wmax);
    if (!weight || !wmin || !wmax) {
        std::cerr << "error: bad weight literal\n";
        return kExitUsage;
    }
    WeightRange range{*wmin, *wmax, opt.max_den};

    fs::create_directories(opt.out_dir);
    std::ofstream meta(fs::path(opt.out_dir) / "metadata.txt");
    meta << "generator mt19937_64\n"
         << "family " << opt.family << '\n'
         << "seed " << opt.seed << '\n';

    if (opt.family == "cycle") {
        write_graph_file(fs::path(opt.out_dir) / "cycle.graph", gen_cycle(opt.n, *weight));
        meta << "n " << opt.n << "\nweight " << to_string(*weight) << '\n';
    } else if (opt.family == "bidirected") {
        auto g = gen_bidirected(opt.n, base_edges(opt.base, opt.n), *weight);
        write_graph_file(fs::path(opt.out_dir) / (opt.base + ".graph"), g);
        meta << "base " << opt.base << "\nn " << opt.n << "\nweight " << to_string(*weight)
             << '\n';
    } else if (opt.family == "random") {
        for (int i = 0; i < opt.count; ++i) {
            auto g = gen_random_strong(opt.n, opt.m, range, opt.seed + i);
            write_graph_file(fs::path(opt.out_dir) / (instance_name(i) + ".graph"), g);
        }
        meta << "count " << opt.count << "\nn " << opt.n << "\nm " << opt.m << "\nwmin "
             << to_string(range.lo) << "\nwmax " << to_string(range.hi) << "\nmax_den "
             << range.max_denominator << '\n';
    } else if (opt.family == "halfint") {
        CorpusParams params;
        params.min_n = std::max(2, opt.n - 2);
        params.max_n = opt.n;
        params.weights = range;
        auto corpus = gen_half_integral_corpus(opt.count, params, opt.seed);
        for (int i = 0; i < static_cast<int>(corpus.size()); ++i) {
            write_graph_file(fs::path(opt.out_dir) / (instance_name(i) + ".graph"),
                             corpus[i].graph);
            write_solution_file(fs::path(opt.out_dir) / (instance_name(i) + ".x"),
                                corpus[i].x.values());
        }
        meta << "count " << opt.count << "\nmin_n " << params.min_n << "\nmax_n "
             << params.max_n << '\n';
    } else {
        std::cerr << "error: unknown family '" << opt.family << "'\n";
        return kExitUsage;
    }
    return kExitOk;
}

int run_bench(const std::string& dir, const std::string& out_csv, int max_arcs) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.path().extension() == ".graph") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::ofstream csv(out_csv);
    if (!csv) {
        std::cerr << "error: cannot open " << out_csv << '\n';
        return kExitUsage;
    }
    csv << "instance,n,m,lp,f,round_w,bound,fred_w,opt,ratio_round,ratio_fred\n";

    for (const fs::path& file : files) {
        auto g = read_graph_file(file.string());
        std::string name = file.stem().string();
        csv << name << ',' << g.vertex_count() << ',' << g.arc_count() << ',';
        if (g.vertex_count() > 1 && !is_strongly_connected(g)) {
            std::cerr << name << ": not strongly connected, skipped\n";
            csv << ",,,,,,,\n";
            continue;
        }
        auto lp = solve_wmscss_lp(g);
        auto report = round_min_pair(g, lp.solution, 0);
        auto fred = frederickson_two_approx(g, 0);

        std::optional<Rational> opt;
        if (g.arc_count() <= max_arcs) {
            opt = exact_opt(g, max_arcs).weight;
        } else {
            std::cerr << name << ": " << g.arc_count() << " arcs, exact optimum skipped\n";
        }

        csv << to_string(lp.objective) << ',' << to_string(report.f) << ','
            << to_string(report.solution_weight) << ',' << to_string(report.bound) << ','
            << to_string(fred.weight) << ',';
        if (opt) csv << to_string(*opt);
        csv << ',';
        // ratios are undefined for a zero-weight optimum
        if (opt && *opt > 0)
            csv << to_string(report.solution_weight / *opt) << ','
                << to_string(fred.weight / *opt);
        else
            csv << ',';
        csv << '\n';
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact LP rounding toolkit for minimum strongly connected spanning subgraphs"};
    app.require_subcommand(1);

    std::string graph_file;
    std::optional<std::string> x_file;
    std::optional<int> root;
    bool sweep_roots = false;
    bool no_pad = false;
    bool assert_bound = false;
    int max_arcs = 22;
    int bench_max_arcs = 14;
    GenOptions gen;
    std::string bench_dir, bench_out = "report.csv";

    auto* lp_cmd = app.add_subcommand("lp", "solve the cut-covering LP");
    lp_cmd->add_option("graph", graph_file, "graph file")->required();

    auto* round_cmd = app.add_subcommand("round", "round a fractional point");
    round_cmd->add_option("graph", graph_file, "graph file")->required();
    round_cmd->add_option("--x", x_file, "point to round (default: LP optimum)");
    auto* root_opt = round_cmd->add_option("--root", root, "root vertex (default 0)");
    round_cmd->add_flag("--sweep-roots", sweep_roots, "try every root, keep the best")
        ->excludes(root_opt);
    round_cmd->add_flag("--no-pad", no_pad, "skip marginal padding");
    round_cmd->add_flag("--assert-bound", assert_bound, "re-certify the report");

    auto* approx_cmd = app.add_subcommand("approx2", "two-arborescence union baseline");
    approx_cmd->add_option("graph", graph_file, "graph file")->required();
    auto* approx_root = approx_cmd->add_option("--root", root, "root vertex (default 0)");
    approx_cmd->add_flag("--sweep-roots", sweep_roots, "try every root, keep the best")
        ->excludes(approx_root);

    auto* exact_cmd = app.add_subcommand("exact", "exact optimum by subset search");
    exact_cmd->add_option("graph", graph_file, "graph file")->required();
    exact_cmd->add_option("--max-arcs", max_arcs, "refusal threshold (default 22)");

    auto* gen_cmd = app.add_subcommand("gen", "generate an instance corpus");
    gen_cmd->add_option("family", gen.family, "cycle | bidirected | random | halfint")
        ->required();
    gen_cmd->add_option("-o,--out", gen.out_dir, "output directory")->required();
    gen_cmd->add_option("--seed", gen.seed, "rng seed");
    gen_cmd->add_option("--n", gen.n, "vertex count");
    gen_cmd->add_option("--m", gen.m, "arc count (random family)");
    gen_cmd->add_option("--count", gen.count, "instances to generate");
    gen_cmd->add_option("--weight", gen.weight, "uniform weight (cycle/bidirected)");
    gen_cmd->add_option("--wmin", gen.wmin, "weight range low");
    gen_cmd->add_option("--wmax", gen.wmax, "weight range high");
    gen_cmd->add_option("--max-den", gen.max_den, "largest weight denominator");
    gen_cmd->add_option("--base", gen.base, "bidirected base: path|cycle|star|complete");

    auto* bench_cmd = app.add_subcommand("bench", "run the pipeline over a corpus");
    bench_cmd->add_option("dir", bench_dir, "corpus directory")->required();
    bench_cmd->add_option("-o,--out", bench_out, "CSV output path");
    bench_cmd->add_option("--max-arcs", bench_max_arcs,
                          "exact optimum refusal threshold (default 14)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (lp_cmd->parsed()) return run_lp(graph_file);
        if (round_cmd->parsed())
            return run_round(graph_file, x_file, root, sweep_roots, !no_pad, assert_bound);
        if (approx_cmd->parsed()) return run_approx2(graph_file, root, sweep_roots);
        if (exact_cmd->parsed()) return run_exact(graph_file, max_arcs);
        if (gen_cmd->parsed()) return run_gen(gen);
        if (bench_cmd->parsed()) return run_bench(bench_dir, bench_out, bench_max_arcs);
    } catch (const InfeasibleError& e) {
        return report_infeasible(e);
    } catch (const SizeLimitError& e) {
        std::cerr << "refused: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
