#include "wmscss/decompose.hpp"

#include "wmscss/arborescence.hpp"
#include "wmscss/maxflow.hpp"

#include <algorithm>
#include <sstream>

namespace wmscss {

ScaledCapacities common_denominator_scale(const FractionalSolution& x) {
    Integer d = 1;
    for (const Rational& v : x.values())
        if (v != 0) d = lcm(d, denominator(v));
    std::vector<Integer> cap;
    cap.reserve(x.arc_count());
    for (const Rational& v : x.values()) cap.push_back(numerator(v) * (d / denominator(v)));
    return ScaledCapacities{std::move(d), std::move(cap)};
}

namespace {

std::vector<Rational> as_rational(const std::vector<Integer>& cap) {
    std::vector<Rational> out;
    out.reserve(cap.size());
    for (const Integer& c : cap) out.emplace_back(c);
    return out;
}

}  // namespace

bool packing_feasible(const Digraph& g, const std::vector<Integer>& cap, int root,
                      const VertexSet& covered, const Integer& t) {
    if (static_cast<int>(cap.size()) != g.arc_count())
        throw std::invalid_argument("capacity vector does not match arc count");
    if (!covered.contains(root)) throw std::invalid_argument("root must be covered");
    if (t < 0) throw std::invalid_argument("t must be non-negative");
    int n = g.vertex_count();

    // (a) sets of uncovered vertices only: demand t+1
    if (!covered.full()) {
        auto merged = merge_vertices(g, covered);
        std::vector<Rational> mcap(merged.graph.arc_count());
        for (int id = 0; id < merged.graph.arc_count(); ++id)
            mcap[id] = Rational(cap[merged.arc_origin[id]]);
        int rho = merged.vertex_map[root];
        Rational demand(t + 1);
        for (int w = 0; w < n; ++w) {
            if (covered.contains(w)) continue;
            if (min_cut(merged.graph, mcap, merged.vertex_map[w], rho).value < demand)
                return false;
        }
    }

    // (b) sets containing a covered vertex: demand t
    if (t > 0) {
        auto rcap = as_rational(cap);
        Rational demand(t);
        for (int w = 0; w < n; ++w) {
            if (w == root || !covered.contains(w)) continue;
            if (min_cut(g, rcap, w, root).value < demand) return false;
        }
    }
    return true;
}

std::vector<int> extract_arborescence(const Digraph& g, std::vector<Integer>& cap,
                                      int root, const Integer& t) {
    int n = g.vertex_count();
    VertexSet covered(n, {root});
    std::vector<int> chosen;
    chosen.reserve(n - 1);

    while (!covered.full()) {
        bool grown = false;
        for (const Arc& a : g.arcs()) {
            if (cap[a.id] < 1 || covered.contains(a.tail) || !covered.contains(a.head))
                continue;
            cap[a.id] -= 1;
            covered.insert(a.tail);
            if (packing_feasible(g, cap, root, covered, t)) {
                chosen.push_back(a.id);
                grown = true;
                break;
            }
            cap[a.id] += 1;
            covered.erase(a.tail);
        }
        if (!grown)
            throw PackingError("no admissible arc: packing invariant violated");
    }
    std::sort(chosen.begin(), chosen.end());
    return chosen;
}

namespace {

// Largest multiplicity the residual supports for the tree just extracted at
// one unit: feasible(m) <=> cap - (m-1) on the tree arcs still covers
// remaining - m everywhere. The feasible m form an interval, so binary
// search applies.
Integer maximal_multiplicity(const Digraph& g, const std::vector<Integer>& cap,
                             int root, const std::vector<int>& tree,
                             const Integer& remaining) {
    VertexSet everything(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v) everything.insert(v);

    auto feasible = [&](const Integer& m) {
        std::vector<Integer> residual = cap;
        for (int id : tree) {
            residual[id] -= m - 1;
            if (residual[id] < 0) return false;
        }
        return packing_feasible(g, residual, root, everything, remaining - m);
    };

    Integer lo = 1, hi = remaining;
    while (lo < hi) {
        Integer mid = (lo + hi + 1) / 2;
        if (feasible(mid))
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

struct UnitPart {
    std::vector<int> arcs;
    Integer units;
};

// Spread each arc's leftover capacity over parts that miss it, splitting a
// part in two when only a fraction of its units is needed. Possible because
// the leftover of arc a is at most the total units of parts missing a
// (cap_a <= D since x_a <= 1).
void pad_to_exact_marginals(std::vector<UnitPart>& parts, const std::vector<Integer>& leftover) {
    for (int id = 0; id < static_cast<int>(leftover.size()); ++id) {
        Integer need = leftover[id];
        for (std::size_t k = 0; k < parts.size() && need > 0; ++k) {
            if (std::binary_search(parts[k].arcs.begin(), parts[k].arcs.end(), id)) continue;
            if (parts[k].units <= need) {
                need -= parts[k].units;
                parts[k].arcs.insert(
                    std::lower_bound(parts[k].arcs.begin(), parts[k].arcs.end(), id), id);
            } else {
                UnitPart split{parts[k].arcs, parts[k].units - need};
                parts[k].units = need;
                parts[k].arcs.insert(
                    std::lower_bound(parts[k].arcs.begin(), parts[k].arcs.end(), id), id);
                parts.insert(parts.begin() + k + 1, std::move(split));
                need = 0;
            }
        }
        if (need != 0) throw PackingError("leftover capacity exceeds the available parts");
    }
}

}  // namespace

ConvexCombination decompose(const Digraph& g, const FractionalSolution& x, int root,
                            Direction direction, bool pad) {
    auto feasibility = check_arborescence_lp_feasible(g, x, root, direction);
    if (!feasibility.feasible)
        throw InfeasibleError("point is infeasible for the arborescence LP",
                              std::move(*feasibility.violated));

    const Digraph work = direction == Direction::in ? g : reverse(g);
    auto [d, cap] = common_denominator_scale(x);

    std::vector<UnitPart> parts;
    Integer remaining = d;
    while (remaining > 0) {
        if (g.vertex_count() <= 1) {
            parts.push_back(UnitPart{{}, remaining});
            break;
        }
        auto tree = extract_arborescence(work, cap, root, remaining - 1);
        Integer m = maximal_multiplicity(work, cap, root, tree, remaining);
        for (int id : tree) cap[id] -= m - 1;
        remaining -= m;
        parts.push_back(UnitPart{std::move(tree), std::move(m)});
    }

    if (pad) pad_to_exact_marginals(parts, cap);

    ConvexCombination comb{direction, root, {}};
    comb.parts.reserve(parts.size());
    for (UnitPart& p : parts)
        comb.parts.push_back(ConvexPart{std::move(p.arcs), Rational(p.units, d)});
    return comb;
}

Rational marginal(const ConvexCombination& comb, int arc_id) {
    Rational total = 0;
    for (const ConvexPart& p : comb.parts)
        if (std::binary_search(p.arcs.begin(), p.arcs.end(), arc_id)) total += p.coeff;
    return total;
}

std::string to_text(const ConvexCombination& comb) {
    std::ostringstream out;
    for (std::size_t k = 0; k < comb.parts.size(); ++k) {
        out << "part " << k << " coeff " << to_string(comb.parts[k].coeff) << " :";
        for (int id : comb.parts[k].arcs) out << ' ' << id;
        out << '\n';
    }
    return out.str();
}

int pick_part(const ConvexCombination& comb, const Rational& u) {
    if (u < 0 || u >= 1) throw std::invalid_argument("u must lie in [0,1)");
    Rational cumulative = 0;
    for (std::size_t k = 0; k < comb.parts.size(); ++k) {
        cumulative += comb.parts[k].coeff;
        if (u < cumulative) return static_cast<int>(k);
    }
    return static_cast<int>(comb.parts.size()) - 1;
}

}  // namespace wmscss
