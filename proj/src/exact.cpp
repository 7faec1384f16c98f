#include "wmscss/exact.hpp"

#include "wmscss/arborescence.hpp"

#include <algorithm>

namespace wmscss {

namespace {

// Strong connectivity of the subgraph spanned by `active` arcs.
bool subgraph_strongly_connected(const Digraph& g, const std::vector<char>& active) {
    Digraph sub(g.vertex_count());
    for (const Arc& a : g.arcs())
        if (active[a.id]) sub.add_arc(a.tail, a.head, Rational(0));
    return is_strongly_connected(sub);
}

struct SubsetSearch {
    const Digraph& g;
    std::vector<int> best_arcs;
    Rational best_weight;
    std::vector<char> chosen;     // arcs decided in
    std::vector<char> available;  // chosen plus undecided

    void consider_leaf(const Rational& weight) {
        std::vector<int> arcs;
        for (int id = 0; id < g.arc_count(); ++id)
            if (chosen[id]) arcs.push_back(id);
        if (weight < best_weight ||
            (weight == best_weight &&
             std::lexicographical_compare(arcs.begin(), arcs.end(), best_arcs.begin(),
                                          best_arcs.end()))) {
            best_weight = weight;
            best_arcs = std::move(arcs);
        }
    }

    void run(int next, Rational partial) {
        if (partial > best_weight) return;
        if (!subgraph_strongly_connected(g, available)) return;
        if (next == g.arc_count()) {
            consider_leaf(partial);
            return;
        }
        // include-first keeps the first-found optimum lexicographically small
        chosen[next] = 1;
        run(next + 1, partial + g.arc(next).weight);
        chosen[next] = 0;
        available[next] = 0;
        run(next + 1, std::move(partial));
        available[next] = 1;
    }
};

}  // namespace

OptResult exact_opt(const Digraph& g, int max_arcs) {
    if (g.arc_count() > max_arcs)
        throw SizeLimitError("instance has " + std::to_string(g.arc_count()) +
                             " arcs; exhaustive search is limited to " +
                             std::to_string(max_arcs));
    if (g.vertex_count() <= 1) return OptResult{{}, Rational(0)};
    if (!is_strongly_connected(g))
        throw InfeasibleError("graph is not strongly connected", zero_cut_witness(g));

    auto seed = frederickson_two_approx(g, 0);
    SubsetSearch search{g,
                        std::move(seed.arcs),
                        std::move(seed.weight),
                        std::vector<char>(g.arc_count(), 0),
                        std::vector<char>(g.arc_count(), 1)};
    search.run(0, Rational(0));
    return OptResult{std::move(search.best_arcs), std::move(search.best_weight)};
}

std::vector<std::pair<std::vector<int>, Rational>> enumerate_arborescences(
    const Digraph& g, int root, Direction direction, int max_vertices) {
    int n = g.vertex_count();
    if (n > max_vertices)
        throw SizeLimitError("arborescence enumeration is limited to " +
                             std::to_string(max_vertices) + " vertices");
    if (root < 0 || root >= n) throw std::invalid_argument("root out of range");

    // Each non-root vertex picks one arc it owns (outgoing for in-trees,
    // entering for out-trees); keep the combinations that reach the root.
    std::vector<std::vector<int>> choices(n);
    for (const Arc& a : g.arcs()) {
        int owner = direction == Direction::in ? a.tail : a.head;
        if (owner != root) choices[owner].push_back(a.id);
    }

    std::vector<std::pair<std::vector<int>, Rational>> found;
    std::vector<int> pick;
    std::vector<int> owners;
    for (int v = 0; v < n; ++v)
        if (v != root) owners.push_back(v);

    auto emit = [&]() {
        std::vector<int> arcs = pick;
        std::sort(arcs.begin(), arcs.end());
        Arborescence t{root, direction, arcs};
        if (!validate_arborescence(g, t)) found.emplace_back(std::move(arcs), g.total_weight(pick));
    };
    auto recurse = [&](auto&& self, std::size_t i) -> void {
        if (i == owners.size()) {
            emit();
            return;
        }
        for (int id : choices[owners[i]]) {
            pick.push_back(id);
            self(self, i + 1);
            pick.pop_back();
        }
    };
    recurse(recurse, 0);
    return found;
}

std::vector<std::pair<VertexSet, Rational>> enumerate_cuts(
    const Digraph& g, const std::vector<Rational>& cap, int max_vertices) {
    int n = g.vertex_count();
    if (n > max_vertices)
        throw SizeLimitError("cut enumeration is limited to " +
                             std::to_string(max_vertices) + " vertices");
    if (static_cast<int>(cap.size()) != g.arc_count())
        throw std::invalid_argument("capacity vector does not match arc count");

    std::vector<std::pair<VertexSet, Rational>> cuts;
    for (unsigned mask = 1; mask + 1 < (1u << n); ++mask) {
        VertexSet side(n);
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) side.insert(v);
        Rational value = 0;
        for (int id : delta_plus(g, side)) value += cap[id];
        cuts.emplace_back(std::move(side), std::move(value));
    }
    return cuts;
}

}  // namespace wmscss
