#include "wmscss/maxflow.hpp"

#include <algorithm>
#include <queue>

namespace wmscss {

namespace {

struct ResidualEdge {
    int to;
    Rational cap;
    int rev;  // index of the reverse edge in adj[to]
};

}  // namespace

MinCutResult min_cut(const Digraph& g, const std::vector<Rational>& cap,
                     int source, int sink) {
    int n = g.vertex_count();
    if (source == sink) throw std::invalid_argument("source and sink must differ");
    if (source < 0 || source >= n || sink < 0 || sink >= n)
        throw std::invalid_argument("source or sink out of range");
    if (static_cast<int>(cap.size()) != g.arc_count())
        throw std::invalid_argument("capacity vector does not match arc count");

    std::vector<std::vector<ResidualEdge>> adj(n);
    for (const Arc& a : g.arcs()) {
        const Rational& c = cap[a.id];
        if (c < 0) throw std::invalid_argument("capacities must be non-negative");
        if (c == 0) continue;
        adj[a.tail].push_back({a.head, c, static_cast<int>(adj[a.head].size())});
        adj[a.head].push_back({a.tail, Rational(0), static_cast<int>(adj[a.tail].size()) - 1});
    }

    std::vector<int> prev_vertex(n), prev_edge(n);
    for (;;) {
        // BFS for a shortest augmenting path
        std::fill(prev_vertex.begin(), prev_vertex.end(), -1);
        prev_vertex[source] = source;
        std::queue<int> queue;
        queue.push(source);
        while (!queue.empty() && prev_vertex[sink] == -1) {
            int v = queue.front();
            queue.pop();
            for (int i = 0; i < static_cast<int>(adj[v].size()); ++i) {
                const ResidualEdge& e = adj[v][i];
                if (e.cap > 0 && prev_vertex[e.to] == -1) {
                    prev_vertex[e.to] = v;
                    prev_edge[e.to] = i;
                    queue.push(e.to);
                }
            }
        }
        if (prev_vertex[sink] == -1) break;

        Rational bottleneck = -1;
        for (int v = sink; v != source; v = prev_vertex[v]) {
            const Rational& c = adj[prev_vertex[v]][prev_edge[v]].cap;
            if (bottleneck < 0 || c < bottleneck) bottleneck = c;
        }
        for (int v = sink; v != source; v = prev_vertex[v]) {
            ResidualEdge& e = adj[prev_vertex[v]][prev_edge[v]];
            e.cap -= bottleneck;
            adj[e.to][e.rev].cap += bottleneck;
        }
    }

    // Vertices still reachable from the source form the minimum cut side.
    VertexSet side(n);
    for (int v = 0; v < n; ++v)
        if (prev_vertex[v] != -1) side.insert(v);

    auto crossing = delta_plus(g, side);
    Rational value = 0;
    for (int id : crossing) value += cap[id];
    return MinCutResult{value, CutCertificate{std::move(side), std::move(crossing), value}};
}

}  // namespace wmscss
