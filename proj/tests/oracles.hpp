#pragma once

// Brute-force reference implementations for the unit and acceptance tests.
// Everything here enumerates; nothing shares code with the algorithms under
// test beyond the Digraph container itself.

#include "wmscss/digraph.hpp"

#include <optional>
#include <random>
#include <vector>

namespace oracles {

using wmscss::Arc;
using wmscss::Digraph;
using wmscss::Rational;
using wmscss::VertexSet;

// Reachability closure by Floyd-Warshall.
inline std::vector<std::vector<bool>> reachability(const Digraph& g) {
    int n = g.vertex_count();
    std::vector<std::vector<bool>> reach(n, std::vector<bool>(n, false));
    for (int v = 0; v < n; ++v) reach[v][v] = true;
    for (const Arc& a : g.arcs()) reach[a.tail][a.head] = true;
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    return reach;
}

inline bool strongly_connected(const Digraph& g) {
    auto reach = reachability(g);
    for (int i = 0; i < g.vertex_count(); ++i)
        for (int j = 0; j < g.vertex_count(); ++j)
            if (!reach[i][j]) return false;
    return true;
}

inline Rational cut_value(const Digraph& g, const std::vector<Rational>& cap, unsigned mask) {
    Rational value = 0;
    for (const Arc& a : g.arcs())
        if ((mask >> a.tail & 1) && !(mask >> a.head & 1)) value += cap[a.id];
    return value;
}

// Minimum over all sets containing `source` and excluding `sink`.
inline Rational min_cut_value(const Digraph& g, const std::vector<Rational>& cap,
                              int source, int sink) {
    int n = g.vertex_count();
    std::optional<Rational> best;
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (!(mask >> source & 1) || (mask >> sink & 1)) continue;
        Rational value = cut_value(g, cap, mask);
        if (!best || value < *best) best = value;
    }
    return *best;
}

// Minimum over all proper nonempty cuts.
inline Rational min_proper_cut_value(const Digraph& g, const std::vector<Rational>& cap) {
    int n = g.vertex_count();
    std::optional<Rational> best;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        Rational value = cut_value(g, cap, mask);
        if (!best || value < *best) best = value;
    }
    return *best;
}

// Exact optimum by plain enumeration of all arc subsets; no pruning, no
// seeding, so it cannot inherit a bug from the branch-and-bound path.
inline std::optional<std::pair<std::vector<int>, Rational>> exhaustive_opt(const Digraph& g) {
    int m = g.arc_count();
    std::optional<std::pair<std::vector<int>, Rational>> best;
    for (unsigned mask = 0; mask < (1u << m); ++mask) {
        Digraph sub(g.vertex_count());
        std::vector<int> arcs;
        Rational weight = 0;
        for (int id = 0; id < m; ++id)
            if (mask >> id & 1) {
                sub.add_arc(g.arc(id).tail, g.arc(id).head, Rational(0));
                arcs.push_back(id);
                weight += g.arc(id).weight;
            }
        if (!strongly_connected(sub)) continue;
        if (!best || weight < best->second ||
            (weight == best->second && arcs < best->first))
            best = {std::move(arcs), std::move(weight)};
    }
    return best;
}

// Small random digraphs for property tests: a spanning cycle (so strong
// connectivity holds) plus random chords, or fully random when `force_strong`
// is off.
inline Digraph random_digraph(std::mt19937_64& rng, int n, int m, bool force_strong,
                              int max_weight_den = 3, int max_weight_num = 8) {
    Digraph g(n);
    auto rand_int = [&](int lo, int hi) {
        return lo + static_cast<int>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
    };
    auto rand_weight = [&]() {
        return Rational(rand_int(0, max_weight_num), rand_int(1, max_weight_den));
    };
    int placed = 0;
    if (force_strong) {
        std::vector<int> perm(n);
        for (int i = 0; i < n; ++i) perm[i] = i;
        for (int i = n - 1; i > 0; --i) std::swap(perm[i], perm[rand_int(0, i)]);
        for (int i = 0; i < n; ++i) g.add_arc(perm[i], perm[(i + 1) % n], rand_weight());
        placed = n;
    }
    for (; placed < m; ++placed) {
        int tail = rand_int(0, n - 1);
        int head = rand_int(0, n - 2);
        if (head >= tail) ++head;
        g.add_arc(tail, head, rand_weight());
    }
    return g;
}

}  // namespace oracles
