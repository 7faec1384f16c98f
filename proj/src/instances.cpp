#include "wmscss/instances.hpp"

#include <algorithm>
#include <numeric>
#include <random>

namespace wmscss {

namespace {

// Bounded draw; modulo bias is irrelevant for test-instance generation and
// keeps the byte stream independent of library internals.
std::int64_t draw(std::mt19937_64& rng, std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

Rational draw_weight(std::mt19937_64& rng, const WeightRange& range) {
    if (range.lo > range.hi) throw std::invalid_argument("empty weight range");
    if (range.lo < 0) throw std::invalid_argument("weights must be non-negative");
    if (range.max_denominator < 1) throw std::invalid_argument("max denominator must be >= 1");
    Integer q(draw(rng, 1, range.max_denominator));
    // smallest and largest numerator with p/q inside [lo, hi]
    Integer p_lo = (numerator(range.lo) * q + denominator(range.lo) - 1) / denominator(range.lo);
    Integer p_hi = numerator(range.hi) * q / denominator(range.hi);
    if (p_lo > p_hi) return range.lo;  // q too coarse for the range
    std::int64_t span = static_cast<std::int64_t>(p_hi - p_lo);
    return Rational(p_lo + Integer(draw(rng, 0, span)), q);
}

std::vector<int> random_permutation(std::mt19937_64& rng, int n) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    for (int i = n - 1; i > 0; --i)
        std::swap(perm[i], perm[static_cast<int>(draw(rng, 0, i))]);
    return perm;
}

void check_base_connected(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 0) throw std::invalid_argument("base must have at least one vertex");
    std::vector<std::vector<int>> adj(n);
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n || u == v)
            throw std::invalid_argument("bad base edge");
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    std::vector<char> seen(n, 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int reached = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : adj[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++reached;
                stack.push_back(w);
            }
    }
    if (reached != n) throw std::invalid_argument("base graph is not connected");
}

}  // namespace

Digraph gen_cycle(int n, const Rational& weight) {
    if (n < 1) throw std::invalid_argument("cycle needs at least one vertex");
    Digraph g(n);
    if (n == 1) return g;
    for (int v = 0; v < n; ++v) g.add_arc(v, (v + 1) % n, weight);
    return g;
}

Digraph gen_bidirected(int n, const std::vector<std::pair<int, int>>& edges,
                       const Rational& uniform_weight) {
    std::vector<std::pair<Rational, Rational>> both(edges.size(),
                                                    {uniform_weight, uniform_weight});
    return gen_bidirected(n, edges, both);
}

Digraph gen_bidirected(int n, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<Rational>& per_edge) {
    if (per_edge.size() != edges.size())
        throw std::invalid_argument("one weight per base edge expected");
    std::vector<std::pair<Rational, Rational>> both;
    both.reserve(edges.size());
    for (const Rational& w : per_edge) both.emplace_back(w, w);
    return gen_bidirected(n, edges, both);
}

Digraph gen_bidirected(int n, const std::vector<std::pair<int, int>>& edges,
                       const std::vector<std::pair<Rational, Rational>>& forward_backward) {
    if (forward_backward.size() != edges.size())
        throw std::invalid_argument("one weight pair per base edge expected");
    check_base_connected(n, edges);
    Digraph g(n);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        g.add_arc(edges[i].first, edges[i].second, forward_backward[i].first);
        g.add_arc(edges[i].second, edges[i].first, forward_backward[i].second);
    }
    return g;
}

Digraph gen_random_strong(int n, int m, const WeightRange& weights, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("need at least two vertices");
    if (m < n) throw std::invalid_argument("need at least n arcs for the spanning cycle");
    std::mt19937_64 rng(seed);
    Digraph g(n);
    auto perm = random_permutation(rng, n);
    for (int i = 0; i < n; ++i)
        g.add_arc(perm[i], perm[(i + 1) % n], draw_weight(rng, weights));
    for (int extra = 0; extra < m - n; ++extra) {
        int tail = static_cast<int>(draw(rng, 0, n - 1));
        int head = static_cast<int>(draw(rng, 0, n - 2));
        if (head >= tail) ++head;  // anything but the tail
        g.add_arc(tail, head, draw_weight(rng, weights));
    }
    return g;
}

std::vector<HalfIntegralPair> gen_half_integral_corpus(int count, const CorpusParams& params,
                                                       std::uint64_t seed) {
    if (count < 0) throw std::invalid_argument("count must be non-negative");
    if (params.min_n < 2 || params.max_n < params.min_n)
        throw std::invalid_argument("bad corpus size parameters");
    std::mt19937_64 rng(seed);
    std::vector<HalfIntegralPair> corpus;
    corpus.reserve(count);

    while (static_cast<int>(corpus.size()) < count) {
        int retries = params.max_retries;
        for (;; --retries) {
            if (retries <= 0)
                throw std::runtime_error("half-integral generation retries exhausted");
            int n = static_cast<int>(draw(rng, params.min_n, params.max_n));
            Digraph g(n);
            std::vector<Rational> x;
            // two Hamiltonian cycles at value 1/2 witness every cut
            for (int cycle = 0; cycle < 2; ++cycle) {
                auto perm = random_permutation(rng, n);
                for (int i = 0; i < n; ++i) {
                    g.add_arc(perm[i], perm[(i + 1) % n], draw_weight(rng, params.weights));
                    x.emplace_back(1, 2);
                }
            }
            int extras = static_cast<int>(draw(rng, 0, params.max_extra_arcs));
            for (int e = 0; e < extras; ++e) {
                int tail = static_cast<int>(draw(rng, 0, n - 1));
                int head = static_cast<int>(draw(rng, 0, n - 2));
                if (head >= tail) ++head;
                g.add_arc(tail, head, draw_weight(rng, params.weights));
                x.emplace_back(1);
            }
            FractionalSolution solution(g, std::move(x));
            if (check_wmscss_feasible(g, solution).feasible) {
                corpus.push_back(HalfIntegralPair{std::move(g), std::move(solution)});
                break;
            }
        }
    }
    return corpus;
}

}  // namespace wmscss
