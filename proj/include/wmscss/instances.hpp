#pragma once

#include "wmscss/digraph.hpp"
#include "wmscss/lp.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace wmscss {

// All generators are pure in (parameters, seed): identical calls produce
// identical graphs, byte for byte once serialized. Randomness comes from
// mt19937_64, which the language standard pins down exactly.

// Directed n-cycle 0 -> 1 -> ... -> 0 with a uniform weight; n = 1 is the
// single vertex with no arcs.
Digraph gen_cycle(int n, const Rational& weight);

// Each undirected base edge becomes two opposite arcs (forward first).
// The base must be connected.
Digraph gen_bidirected(int n, const std::vector<std::pair<int, int>>& edges,
                       const Rational& uniform_weight);
Digraph gen_bidirected(int n, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<Rational>& per_edge);
Digraph gen_bidirected(int n, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<std::pair<Rational, Rational>>& forward_backward);

// Weights are drawn as p/q with q uniform in [1, max_denominator] and the
// value uniform over the representable points of [lo, hi].
struct WeightRange {
    Rational lo = 1;
    Rational hi = 10;
    int max_denominator = 4;
};

// Random Hamiltonian cycle (so the result is strongly connected by
// construction) plus m - n extra random arcs. Requires m >= n >= 2.
Digraph gen_random_strong(int n, int m, const WeightRange& weights, std::uint64_t seed);

struct HalfIntegralPair {
    Digraph graph;
    FractionalSolution x;  // feasible, entries in {1/2, 1}
};

struct CorpusParams {
    int min_n = 3;
    int max_n = 7;
    WeightRange weights;
    int max_extra_arcs = 4;  // extra arcs carrying value 1
    int max_retries = 20;
};

// Overlays two Hamiltonian cycles at value 1/2 plus a few value-1 arcs;
// every emitted point is certified by check_wmscss_feasible first.
std::vector<HalfIntegralPair> gen_half_integral_corpus(int count, const CorpusParams& params,
                                                       std::uint64_t seed);

}  // namespace wmscss
