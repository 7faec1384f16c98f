#pragma once

#include "wmscss/digraph.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace wmscss {

// Deliberate refusal to run an exhaustive search above the configured size.
class SizeLimitError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OptResult {
    std::vector<int> arcs;  // lexicographically smallest among the optima
    Rational weight;
};

// Exact optimum by subset search with branch-and-bound pruning: a branch is
// cut when its partial weight already exceeds the incumbent or when the
// still-available arcs cannot restore strong connectivity. The incumbent is
// seeded with the two-arborescence union at root 0. Ties resolve to the
// lexicographically smallest arc-id set.
OptResult exact_opt(const Digraph& g, int max_arcs = 22);

// Every spanning arborescence of the given root and direction, as (arc ids,
// weight) pairs in enumeration order. Oracle for the contraction algorithm
// and the packing tests; refuses above max_vertices.
std::vector<std::pair<std::vector<int>, Rational>> enumerate_arborescences(
    const Digraph& g, int root, Direction direction, int max_vertices = 7);

// All 2^n - 2 proper cuts with their values under the given arc capacities.
std::vector<std::pair<VertexSet, Rational>> enumerate_cuts(
    const Digraph& g, const std::vector<Rational>& cap, int max_vertices = 10);

}  // namespace wmscss
