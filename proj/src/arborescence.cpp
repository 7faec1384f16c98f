#include "wmscss/arborescence.hpp"

#include <algorithm>

namespace wmscss {

namespace {

struct CleArc {
    int tail;
    int head;
    Rational weight;  // reduced weight at the current contraction level
    int orig;         // original arc id, for results and tie-breaking
};

// One contraction level of Chu-Liu/Edmonds for out-arborescences: pick the
// cheapest entering arc per non-root vertex; if the picks are acyclic they
// are optimal, otherwise contract one cycle under reduced costs and recurse.
// Returns original arc ids, or nullopt when some vertex has no entering arc
// at any level (then no spanning out-arborescence exists).
std::optional<std::vector<int>> contract_level(int n, int root, const std::vector<CleArc>& arcs) {
    std::vector<int> best(n, -1);  // index into arcs
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const CleArc& a = arcs[i];
        if (a.head == root) continue;
        int b = best[a.head];
        if (b == -1 || a.weight < arcs[b].weight ||
            (a.weight == arcs[b].weight && a.orig < arcs[b].orig))
            best[a.head] = static_cast<int>(i);
    }
    for (int v = 0; v < n; ++v)
        if (v != root && best[v] == -1) return std::nullopt;

    // Walk tail pointers to find a cycle among the picks.
    std::vector<int> state(n, 0);  // 0 unseen, 1 on current walk, 2 done
    std::vector<int> cycle;
    state[root] = 2;
    for (int start = 0; start < n && cycle.empty(); ++start) {
        int v = start;
        std::vector<int> walk;
        while (state[v] == 0) {
            state[v] = 1;
            walk.push_back(v);
            v = arcs[best[v]].tail;
        }
        if (state[v] == 1) {
            auto it = std::find(walk.begin(), walk.end(), v);
            cycle.assign(it, walk.end());
        }
        for (int w : walk) state[w] = 2;
    }

    if (cycle.empty()) {
        std::vector<int> result;
        result.reserve(n - 1);
        for (int v = 0; v < n; ++v)
            if (v != root) result.push_back(arcs[best[v]].orig);
        return result;
    }

    // Contract the cycle into one supernode.
    std::vector<char> in_cycle(n, 0);
    for (int v : cycle) in_cycle[v] = 1;
    std::vector<int> map(n, -1);
    int next = 0, super = -1;
    for (int v = 0; v < n; ++v) {
        if (in_cycle[v]) {
            if (super == -1) super = next++;
            map[v] = super;
        } else {
            map[v] = next++;
        }
    }

    std::vector<CleArc> contracted;
    std::vector<int> level_index;  // contracted arc -> index into `arcs`
    for (std::size_t i = 0; i < arcs.size(); ++i) {
        const CleArc& a = arcs[i];
        int t = map[a.tail], h = map[a.head];
        if (t == h) continue;
        Rational w = a.weight;
        if (in_cycle[a.head]) w -= arcs[best[a.head]].weight;  // reduced cost
        contracted.push_back(CleArc{t, h, std::move(w), a.orig});
        level_index.push_back(static_cast<int>(i));
    }

    auto sub = contract_level(next, map[root], contracted);
    if (!sub) return std::nullopt;

    // The recursion returns original ids; recover which arc entered the
    // supernode to know which cycle pick gets dropped.
    std::vector<int> result = *sub;
    int enter_at = -1;
    for (std::size_t ci = 0; ci < contracted.size(); ++ci) {
        if (contracted[ci].head != super) continue;
        if (std::find(result.begin(), result.end(), contracted[ci].orig) != result.end()) {
            enter_at = arcs[level_index[ci]].head;  // cycle vertex it enters
            break;
        }
    }
    if (enter_at == -1) throw std::logic_error("contracted solution misses the supernode");
    for (int v : cycle)
        if (v != enter_at) result.push_back(arcs[best[v]].orig);
    return result;
}

std::optional<std::vector<int>> min_out_arborescence_ids(const Digraph& g, int root) {
    std::vector<CleArc> arcs;
    arcs.reserve(g.arc_count());
    for (const Arc& a : g.arcs()) arcs.push_back(CleArc{a.tail, a.head, a.weight, a.id});
    return contract_level(g.vertex_count(), root, arcs);
}

}  // namespace

std::optional<Arborescence> min_cost_arborescence(const Digraph& g, int root,
                                                  Direction direction) {
    if (root < 0 || root >= g.vertex_count())
        throw std::invalid_argument("root out of range");
    auto ids = direction == Direction::out
                   ? min_out_arborescence_ids(g, root)
                   : min_out_arborescence_ids(reverse(g), root);
    if (!ids) return std::nullopt;
    std::sort(ids->begin(), ids->end());
    return Arborescence{root, direction, std::move(*ids)};
}

std::optional<std::string> validate_arborescence(const Digraph& g, const Arborescence& t) {
    int n = g.vertex_count();
    if (t.root < 0 || t.root >= n) return "root out of range";
    if (static_cast<int>(t.arcs.size()) != n - 1)
        return "expected " + std::to_string(n - 1) + " arcs, got " +
               std::to_string(t.arcs.size());

    // In an in-arborescence every non-root vertex owns exactly one arc out
    // of it; in an out-arborescence, one arc into it.
    std::vector<int> owner(n, -1);
    for (int id : t.arcs) {
        if (id < 0 || id >= g.arc_count()) return "arc id out of range";
        const Arc& a = g.arc(id);
        int v = t.direction == Direction::in ? a.tail : a.head;
        if (v == t.root)
            return "root owns arc " + std::to_string(id);
        if (owner[v] != -1)
            return "vertex " + std::to_string(v) + " owns two arcs";
        owner[v] = id;
    }
    for (int v = 0; v < n; ++v) {
        if (v == t.root) continue;
        if (owner[v] == -1) return "vertex " + std::to_string(v) + " has degree 0";
        // follow the functional arcs; must reach the root within n steps
        int cur = v;
        for (int steps = 0; cur != t.root; ++steps) {
            if (steps >= n) return "cycle: root unreachable from vertex " + std::to_string(v);
            const Arc& a = g.arc(owner[cur]);
            cur = t.direction == Direction::in ? a.head : a.tail;
        }
    }
    return std::nullopt;
}

TwoApproxResult frederickson_two_approx(const Digraph& g, int root) {
    if (root < 0 || root >= g.vertex_count())
        throw std::invalid_argument("root out of range");
    if (g.vertex_count() == 1)
        return TwoApproxResult{{},
                               Rational(0),
                               Arborescence{root, Direction::in, {}},
                               Arborescence{root, Direction::out, {}}};
    if (!is_strongly_connected(g))
        throw InfeasibleError("graph is not strongly connected", zero_cut_witness(g));

    auto in_tree = min_cost_arborescence(g, root, Direction::in);
    auto out_tree = min_cost_arborescence(g, root, Direction::out);
    if (!in_tree || !out_tree)
        throw std::logic_error("strongly connected graph must admit both arborescences");

    std::vector<int> arcs;
    std::set_union(in_tree->arcs.begin(), in_tree->arcs.end(), out_tree->arcs.begin(),
                   out_tree->arcs.end(), std::back_inserter(arcs));
    Rational weight = g.total_weight(arcs);
    return TwoApproxResult{std::move(arcs), std::move(weight), std::move(*in_tree),
                           std::move(*out_tree)};
}

}  // namespace wmscss
