#include "wmscss/rounding.hpp"

#include <algorithm>

namespace wmscss {

namespace {

std::vector<int> arc_union(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool solution_strongly_connected(const Digraph& g, const std::vector<int>& arcs) {
    Digraph sub(g.vertex_count());
    for (int id : arcs) sub.add_arc(g.arc(id).tail, g.arc(id).head, Rational(0));
    return is_strongly_connected(sub);
}

}  // namespace

RoundingReport round_min_pair(const Digraph& g, const FractionalSolution& x, int root,
                              bool pad) {
    auto feasibility = check_wmscss_feasible(g, x);
    if (!feasibility.feasible)
        throw InfeasibleError("point is infeasible for the cut-covering LP",
                              std::move(*feasibility.violated));
    if (root < 0 || root >= g.vertex_count())
        throw std::invalid_argument("root out of range");

    auto in_comb = decompose(g, x, root, Direction::in, pad);
    auto out_comb = decompose(g, x, root, Direction::out, pad);

    int best_i = -1, best_j = -1;
    Rational best_weight;
    Rational expected = 0;
    for (std::size_t i = 0; i < in_comb.parts.size(); ++i) {
        for (std::size_t j = 0; j < out_comb.parts.size(); ++j) {
            auto unioned = arc_union(in_comb.parts[i].arcs, out_comb.parts[j].arcs);
            Rational w = g.total_weight(unioned);
            expected += in_comb.parts[i].coeff * out_comb.parts[j].coeff * w;
            if (best_i == -1 || w < best_weight) {
                best_i = static_cast<int>(i);
                best_j = static_cast<int>(j);
                best_weight = std::move(w);
            }
        }
    }

    auto solution = arc_union(in_comb.parts[best_i].arcs, out_comb.parts[best_j].arcs);
    auto f = min_nonzero_entry(x);
    Rational lp_weight = weight_of(g, x);
    Rational f_value = f ? *f : Rational(1);
    Rational bound = (Rational(2) - f_value) * lp_weight;
    return RoundingReport{{best_i, best_j},
                          std::move(solution),
                          std::move(best_weight),
                          std::move(lp_weight),
                          std::move(f_value),
                          std::move(bound),
                          std::move(expected),
                          root,
                          static_cast<int>(in_comb.parts.size()),
                          static_cast<int>(out_comb.parts.size())};
}

Rational expected_union_cost(const Digraph& g, const ConvexCombination& in_comb,
                             const ConvexCombination& out_comb) {
    Rational expected = 0;
    for (const ConvexPart& in_part : in_comb.parts)
        for (const ConvexPart& out_part : out_comb.parts)
            expected += in_part.coeff * out_part.coeff *
                        g.total_weight(arc_union(in_part.arcs, out_part.arcs));
    return expected;
}

std::optional<std::string> certify_bound(const Digraph& g, const FractionalSolution& x,
                                         const RoundingReport& report) {
    if (x.arc_count() != g.arc_count()) return "solution dimension mismatch";

    Rational recomputed = g.total_weight(report.solution_arcs);
    if (recomputed != report.solution_weight)
        return "solution weight is " + to_string(recomputed) + ", reported " +
               to_string(report.solution_weight);

    Rational lp_weight = weight_of(g, x);
    if (lp_weight != report.lp_weight)
        return "w(x) is " + to_string(lp_weight) + ", reported " + to_string(report.lp_weight);

    auto f = min_nonzero_entry(x);
    Rational f_value = f ? *f : Rational(1);
    if (f_value != report.f)
        return "f is " + to_string(f_value) + ", reported " + to_string(report.f);

    Rational bound = (Rational(2) - f_value) * lp_weight;
    if (bound != report.bound)
        return "bound is " + to_string(bound) + ", reported " + to_string(report.bound);

    if (g.vertex_count() > 1 && !solution_strongly_connected(g, report.solution_arcs))
        return "solution is not strongly connected";

    if (report.solution_weight > report.expected_union_cost)
        return "solution weight " + to_string(report.solution_weight) +
               " exceeds the expected union cost " + to_string(report.expected_union_cost);
    if (report.expected_union_cost > bound)
        return "expected union cost " + to_string(report.expected_union_cost) +
               " exceeds the bound " + to_string(bound);

    // arc-wise: 2x - x^2 <= (2 - f) x whenever x is 0 or at least f
    for (const Rational& v : x.values()) {
        Rational lhs = 2 * v - v * v;
        Rational rhs = (Rational(2) - f_value) * v;
        if (lhs > rhs)
            return "arc-wise comparison fails at value " + to_string(v);
    }

    if (entries_clear_of(x, Rational(1, 2)) &&
        report.solution_weight * 2 > lp_weight * 3)
        return "half-integral bound violated: " + to_string(report.solution_weight) +
               " > 3/2 * " + to_string(lp_weight);

    return std::nullopt;
}

}  // namespace wmscss
