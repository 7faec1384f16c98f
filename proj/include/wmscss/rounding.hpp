#pragma once

#include "wmscss/decompose.hpp"
#include "wmscss/digraph.hpp"
#include "wmscss/lp.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace wmscss {

struct RoundingReport {
    std::pair<int, int> chosen_pair;  // (i, j) into the in/out supports
    std::vector<int> solution_arcs;   // the rounded integral solution
    Rational solution_weight;
    Rational lp_weight;  // w(x) of the rounded point
    Rational f;          // min non-zero entry of x (1 for the zero vector)
    Rational bound;      // (2 - f) * w(x)
    Rational expected_union_cost;
    int root;
    int in_support_size;   // alpha
    int out_support_size;  // beta
};

// Decomposes x on both sides, forms every pairwise union I_i u O_j (as a
// set: shared arcs cost once), and returns the cheapest, ties broken by the
// lexicographically smallest (i, j). The result contains an in- and an
// out-arborescence at the root, so it is integral and strongly connected,
// and the averaging argument puts its weight at or below the expected
// union cost, which in turn is at most (2 - f) * w(x).
// Throws InfeasibleError when x is not a cut-covering point.
RoundingReport round_min_pair(const Digraph& g, const FractionalSolution& x, int root,
                              bool pad = true);

// Sum over all support pairs of coeff_i * coeff_j * w(I_i u O_j). With
// exact marginals on both sides this equals
//   sum_a w(a) * (2 x_a - x_a^2)
// by inclusion-exclusion over the two independent draws.
Rational expected_union_cost(const Digraph& g, const ConvexCombination& in_comb,
                             const ConvexCombination& out_comb);

// Re-derives every figure in the report from g and x and checks the chain
//   solution_weight <= expected_union_cost <= (2 - f) * w(x),
// strong connectivity of the solution, the arc-wise 2x - x^2 <= (2 - f) x
// comparison, and, for points with non-zero entries >= 1/2, the 3/2 bound.
// nullopt when everything holds, otherwise a description of the violation.
std::optional<std::string> certify_bound(const Digraph& g, const FractionalSolution& x,
                                         const RoundingReport& report);

}  // namespace wmscss
