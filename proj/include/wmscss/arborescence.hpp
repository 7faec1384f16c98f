#pragma once

#include "wmscss/digraph.hpp"

#include <optional>
#include <string>
#include <vector>

namespace wmscss {

// Spanning arborescence: direction::in means every vertex other than the
// root has exactly one arc out of it in the set and following those arcs
// reaches the root; direction::out is the mirror image on entering arcs.
struct Arborescence {
    int root;
    Direction direction;
    std::vector<int> arcs;  // ascending arc ids, n-1 of them
};

// Minimum-weight spanning arborescence by cycle contraction with exact
// rational reduced costs; ties between equal-weight entering arcs break
// toward the smallest original arc id. nullopt when no spanning
// arborescence of the requested kind exists.
std::optional<Arborescence> min_cost_arborescence(const Digraph& g, int root,
                                                  Direction direction);

// nullopt when t is a valid arborescence of its stated root/direction,
// otherwise a description of the first violation found.
std::optional<std::string> validate_arborescence(const Digraph& g, const Arborescence& t);

struct TwoApproxResult {
    std::vector<int> arcs;  // union as a set; shared arcs counted once
    Rational weight;
    Arborescence in_tree;
    Arborescence out_tree;
};

// Union of a min-cost in-arborescence and a min-cost out-arborescence at the
// same root: strongly connected, and at most twice the optimum since the
// optimum contains a spanning arborescence of each kind. Throws
// InfeasibleError when g is not strongly connected.
TwoApproxResult frederickson_two_approx(const Digraph& g, int root);

}  // namespace wmscss
