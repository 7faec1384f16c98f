#include "wmscss/lp.hpp"

#include "wmscss/simplex.hpp"

#include <algorithm>
#include <set>

namespace wmscss {

FractionalSolution::FractionalSolution(const Digraph& g, std::vector<Rational> values)
    : values_(std::move(values)) {
    if (static_cast<int>(values_.size()) != g.arc_count())
        throw std::invalid_argument("solution dimension does not match arc count");
    for (const Rational& v : values_)
        if (v < 0 || v > 1)
            throw std::invalid_argument("solution entries must lie in [0,1]");
}

std::optional<Rational> FractionalSolution::min_nonzero_entry() const {
    std::optional<Rational> best;
    for (const Rational& v : values_)
        if (v != 0 && (!best || v < *best)) best = v;
    return best;
}

std::optional<Rational> min_nonzero_entry(const FractionalSolution& x) {
    return x.min_nonzero_entry();
}

bool entries_clear_of(const FractionalSolution& x, const Rational& f) {
    for (const Rational& v : x.values())
        if (v > 0 && v < f) return false;
    return true;
}

Rational weight_of(const Digraph& g, const FractionalSolution& x) {
    if (x.arc_count() != g.arc_count())
        throw std::invalid_argument("solution dimension does not match arc count");
    Rational sum = 0;
    for (const Arc& a : g.arcs()) sum += a.weight * x.value(a.id);
    return sum;
}

namespace {

void require_dimension(const Digraph& g, const FractionalSolution& x) {
    if (x.arc_count() != g.arc_count())
        throw std::invalid_argument("solution dimension does not match arc count");
}

// Re-express a cut found on reverse(g) as a leaving cut of g: the arcs
// entering S are exactly the arcs leaving its complement.
CutCertificate complement_certificate(const Digraph& g, const CutCertificate& rev_cut) {
    VertexSet side = rev_cut.side.complement();
    auto crossing = delta_plus(g, side);
    Rational value = rev_cut.value;
    return CutCertificate{std::move(side), std::move(crossing), std::move(value)};
}

}  // namespace

FeasibilityCheck check_wmscss_feasible(const Digraph& g, const FractionalSolution& x) {
    require_dimension(g, x);
    int n = g.vertex_count();
    for (int v = 1; v < n; ++v) {
        auto forward = min_cut(g, x.values(), 0, v);
        if (forward.value < 1) return {false, std::move(forward.cut)};
        auto backward = min_cut(g, x.values(), v, 0);
        if (backward.value < 1) return {false, std::move(backward.cut)};
    }
    return {true, std::nullopt};
}

FeasibilityCheck check_arborescence_lp_feasible(const Digraph& g,
                                                const FractionalSolution& x,
                                                int root, Direction direction) {
    require_dimension(g, x);
    if (root < 0 || root >= g.vertex_count())
        throw std::invalid_argument("root out of range");
    const Digraph work = direction == Direction::in ? g : reverse(g);
    for (int v = 0; v < g.vertex_count(); ++v) {
        if (v == root) continue;
        auto cut = min_cut(work, x.values(), v, root);
        if (cut.value < 1) {
            if (direction == Direction::out)
                return {false, complement_certificate(g, cut.cut)};
            return {false, std::move(cut.cut)};
        }
    }
    return {true, std::nullopt};
}

FractionalSolution truncate_to_box(const Digraph& g, const std::vector<Rational>& raw) {
    std::vector<Rational> capped;
    capped.reserve(raw.size());
    for (const Rational& v : raw) {
        if (v < 0) throw std::invalid_argument("entries must be non-negative");
        capped.push_back(v > 1 ? Rational(1) : v);
    }
    return FractionalSolution(g, std::move(capped));
}

LpOutcome solve_wmscss_lp(const Digraph& g) {
    int n = g.vertex_count();
    int m = g.arc_count();
    if (n <= 1)
        return LpOutcome{FractionalSolution(g, std::vector<Rational>(m, Rational(0))),
                         Rational(0),
                         {}};
    if (!is_strongly_connected(g))
        throw InfeasibleError("graph is not strongly connected", zero_cut_witness(g));

    std::vector<Rational> costs;
    costs.reserve(m);
    for (const Arc& a : g.arcs()) costs.push_back(a.weight);

    // Seed with all singleton cuts; separation adds the rest on demand.
    std::set<std::vector<int>> seen;
    std::vector<std::vector<int>> lp_rows;
    for (int v = 0; v < n; ++v) {
        VertexSet s(n, {v});
        for (auto&& row : {delta_plus(g, s), delta_plus(g, s.complement())})
            if (seen.insert(row).second) lp_rows.push_back(row);
    }

    std::vector<CutCertificate> generated;
    for (;;) {
        auto lp = solve_covering_lp(m, lp_rows, costs);
        if (lp.status != LpStatus::optimal)
            throw std::logic_error("covering LP of a strongly connected graph must be feasible");
        FractionalSolution x(g, std::move(lp.solution));

        // Full separation sweep; collect every violated cut this round.
        bool violated = false;
        auto consider = [&](MinCutResult&& cut_result) {
            if (cut_result.value >= 1) return;
            if (seen.insert(cut_result.cut.crossing_arcs).second) {
                lp_rows.push_back(cut_result.cut.crossing_arcs);
                generated.push_back(std::move(cut_result.cut));
                violated = true;
            }
        };
        for (int v = 1; v < n; ++v) {
            consider(min_cut(g, x.values(), 0, v));
            consider(min_cut(g, x.values(), v, 0));
        }
        if (!violated) {
            Rational objective = weight_of(g, x);
            return LpOutcome{std::move(x), std::move(objective), std::move(generated)};
        }
    }
}

}  // namespace wmscss
