#include "wmscss/digraph.hpp"

#include <algorithm>

namespace wmscss {

Digraph::Digraph(int n) : n_(n) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
}

int Digraph::add_arc(int tail, int head, Rational weight) {
    if (tail < 0 || tail >= n_ || head < 0 || head >= n_)
        throw std::invalid_argument("arc endpoint out of range");
    if (tail == head) throw std::invalid_argument("self-loops are not allowed");
    if (weight < 0) throw std::invalid_argument("arc weights must be non-negative");
    int id = static_cast<int>(arcs_.size());
    arcs_.push_back(Arc{id, tail, head, std::move(weight)});
    return id;
}

Rational Digraph::total_weight(const std::vector<int>& arc_ids) const {
    Rational sum = 0;
    for (int id : arc_ids) sum += arc(id).weight;
    return sum;
}

VertexSet::VertexSet(int n) : in_(n, 0) {
    if (n < 0) throw std::invalid_argument("universe size must be non-negative");
}

VertexSet::VertexSet(int n, std::initializer_list<int> members) : VertexSet(n) {
    for (int v : members) insert(v);
}

void VertexSet::insert(int v) {
    if (!in_.at(v)) {
        in_[v] = 1;
        ++count_;
    }
}

void VertexSet::erase(int v) {
    if (in_.at(v)) {
        in_[v] = 0;
        --count_;
    }
}

VertexSet VertexSet::complement() const {
    VertexSet out(universe_size());
    for (int v = 0; v < universe_size(); ++v)
        if (!contains(v)) out.insert(v);
    return out;
}

std::vector<int> VertexSet::members() const {
    std::vector<int> out;
    out.reserve(count_);
    for (int v = 0; v < universe_size(); ++v)
        if (in_[v]) out.push_back(v);
    return out;
}

namespace {

std::vector<std::vector<int>> out_adjacency(const Digraph& g) {
    std::vector<std::vector<int>> adj(g.vertex_count());
    for (const Arc& a : g.arcs()) adj[a.tail].push_back(a.head);
    return adj;
}

// Iterative DFS recording finish order.
void dfs_finish_order(const std::vector<std::vector<int>>& adj, int start,
                      std::vector<char>& seen, std::vector<int>& order) {
    std::vector<std::pair<int, std::size_t>> stack{{start, 0}};
    seen[start] = 1;
    while (!stack.empty()) {
        auto& [v, next] = stack.back();
        if (next < adj[v].size()) {
            int w = adj[v][next++];
            if (!seen[w]) {
                seen[w] = 1;
                stack.emplace_back(w, 0);
            }
        } else {
            order.push_back(v);
            stack.pop_back();
        }
    }
}

}  // namespace

std::vector<int> strongly_connected_components(const Digraph& g) {
    // Kosaraju: finish order on g, then collect components on the reverse.
    int n = g.vertex_count();
    auto adj = out_adjacency(g);
    std::vector<std::vector<int>> radj(n);
    for (const Arc& a : g.arcs()) radj[a.head].push_back(a.tail);

    std::vector<char> seen(n, 0);
    std::vector<int> order;
    order.reserve(n);
    for (int v = 0; v < n; ++v)
        if (!seen[v]) dfs_finish_order(adj, v, seen, order);

    std::vector<int> comp(n, -1);
    int comp_count = 0;
    for (int i = n - 1; i >= 0; --i) {
        int root = order[i];
        if (comp[root] != -1) continue;
        std::vector<int> stack{root};
        comp[root] = comp_count;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int w : radj[v])
                if (comp[w] == -1) {
                    comp[w] = comp_count;
                    stack.push_back(w);
                }
        }
        ++comp_count;
    }
    // Kosaraju emits components in topological order of the condensation;
    // flip so that component 0 is a sink (no leaving arcs).
    for (int v = 0; v < n; ++v) comp[v] = comp_count - 1 - comp[v];
    return comp;
}

bool is_strongly_connected(const Digraph& g) {
    if (g.vertex_count() <= 1) return true;
    const auto comp = strongly_connected_components(g);
    return std::all_of(comp.begin(), comp.end(), [](int c) { return c == 0; });
}

std::vector<int> delta_plus(const Digraph& g, const VertexSet& s) {
    if (s.universe_size() != g.vertex_count())
        throw std::invalid_argument("vertex set universe does not match graph");
    if (s.empty() || s.full())
        throw std::invalid_argument("cut side must be a proper nonempty subset");
    std::vector<int> out;
    for (const Arc& a : g.arcs())
        if (s.contains(a.tail) && !s.contains(a.head)) out.push_back(a.id);
    return out;
}

std::vector<int> delta_minus(const Digraph& g, const VertexSet& s) {
    if (s.universe_size() != g.vertex_count())
        throw std::invalid_argument("vertex set universe does not match graph");
    if (s.empty() || s.full())
        throw std::invalid_argument("cut side must be a proper nonempty subset");
    std::vector<int> out;
    for (const Arc& a : g.arcs())
        if (!s.contains(a.tail) && s.contains(a.head)) out.push_back(a.id);
    return out;
}

Digraph reverse(const Digraph& g) {
    Digraph r(g.vertex_count());
    for (const Arc& a : g.arcs()) r.add_arc(a.head, a.tail, a.weight);
    return r;
}

MergeResult merge_vertices(const Digraph& g, const VertexSet& group) {
    if (group.universe_size() != g.vertex_count())
        throw std::invalid_argument("vertex set universe does not match graph");
    if (group.empty()) throw std::invalid_argument("merge group must be nonempty");

    int n = g.vertex_count();
    std::vector<int> map(n, -1);
    int next = 0;
    int merged_id = -1;
    for (int v = 0; v < n; ++v) {
        if (group.contains(v)) {
            if (merged_id == -1) merged_id = next++;
            map[v] = merged_id;
        } else {
            map[v] = next++;
        }
    }

    Digraph merged(next);
    std::vector<int> origin;
    for (const Arc& a : g.arcs()) {
        int t = map[a.tail], h = map[a.head];
        if (t == h) continue;  // internal to the group
        merged.add_arc(t, h, a.weight);
        origin.push_back(a.id);
    }
    return MergeResult{std::move(merged), std::move(map), std::move(origin)};
}

CutCertificate zero_cut_witness(const Digraph& g) {
    if (g.vertex_count() < 2 || is_strongly_connected(g))
        throw std::logic_error("graph has no zero cut");
    const auto comp = strongly_connected_components(g);
    VertexSet side(g.vertex_count());
    for (int v = 0; v < g.vertex_count(); ++v)
        if (comp[v] == 0) side.insert(v);  // sink component
    auto crossing = delta_plus(g, side);
    return CutCertificate{std::move(side), std::move(crossing), Rational(0)};
}

}  // namespace wmscss
