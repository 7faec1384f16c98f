#pragma once

#include "wmscss/rational.hpp"

#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace wmscss {

// The positive orientation everywhere is "in": paths toward a root, cuts as
// arcs leaving a set. "out" problems are solved on the reverse graph.
enum class Direction { in, out };

struct Arc {
    int id;
    int tail;
    int head;
    Rational weight;  // >= 0
};

// Weighted digraph over vertices 0..n-1. Parallel arcs are permitted and
// kept distinct by id; self-loops and negative weights are rejected.
// Arc ids are dense 0..m-1 in insertion order. Immutable once built up.
class Digraph {
public:
    explicit Digraph(int n);

    // Returns the id of the new arc.
    int add_arc(int tail, int head, Rational weight);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const Arc& arc(int id) const { return arcs_.at(id); }
    const std::vector<Arc>& arcs() const { return arcs_; }

    Rational total_weight(const std::vector<int>& arc_ids) const;

private:
    int n_;
    std::vector<Arc> arcs_;
};

class VertexSet {
public:
    explicit VertexSet(int n);
    VertexSet(int n, std::initializer_list<int> members);

    void insert(int v);
    void erase(int v);
    bool contains(int v) const { return in_.at(v) != 0; }

    int universe_size() const { return static_cast<int>(in_.size()); }
    int size() const { return count_; }
    bool empty() const { return count_ == 0; }
    bool full() const { return count_ == universe_size(); }
    VertexSet complement() const;
    std::vector<int> members() const;

private:
    std::vector<char> in_;
    int count_ = 0;
};

// Witness for a cut query: `crossing_arcs` is exactly delta_plus(side) and
// `value` the queried capacity summed over it.
struct CutCertificate {
    VertexSet side;
    std::vector<int> crossing_arcs;  // ascending arc ids
    Rational value;
};

// Thrown when an instance admits no solution; carries the violated cut.
class InfeasibleError : public std::runtime_error {
public:
    InfeasibleError(const std::string& what, CutCertificate cut)
        : std::runtime_error(what), cut_(std::move(cut)) {}
    const CutCertificate& cut() const { return cut_; }

private:
    CutCertificate cut_;
};

// Component id per vertex, 0-based, numbered in reverse topological order of
// the condensation (component 0 has no leaving arcs).
std::vector<int> strongly_connected_components(const Digraph& g);

bool is_strongly_connected(const Digraph& g);

// Arcs with tail in s and head outside, ascending ids. Requires a proper
// nonempty s. delta_minus is the entering counterpart.
std::vector<int> delta_plus(const Digraph& g, const VertexSet& s);
std::vector<int> delta_minus(const Digraph& g, const VertexSet& s);

// Every arc (u,v,w) becomes (v,u,w) with the same id. Involution.
Digraph reverse(const Digraph& g);

struct MergeResult {
    Digraph graph;
    std::vector<int> vertex_map;  // old vertex id -> merged vertex id
    std::vector<int> arc_origin;  // merged arc id -> original arc id
};

// Identifies all vertices of `group` into one; arcs internal to the group
// are dropped, parallel arcs kept. The merged vertex takes the slot of the
// smallest member of the group.
MergeResult merge_vertices(const Digraph& g, const VertexSet& group);

// A proper cut with no leaving arcs (exists iff g is not strongly connected
// and has n >= 2). Used as the witness when an instance is infeasible.
CutCertificate zero_cut_witness(const Digraph& g);

}  // namespace wmscss
