#pragma once

#include "wmscss/digraph.hpp"
#include "wmscss/lp.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace wmscss {

// Raised when the constructive packing step finds no admissible arc; under
// the packing theorem this cannot happen for inputs satisfying the oracle
// precondition, so it signals a bug or a corrupted capacity vector.
class PackingError : public std::logic_error {
    using std::logic_error::logic_error;
};

struct ConvexPart {
    std::vector<int> arcs;  // ascending arc ids
    Rational coeff;         // > 0
};

// Convex combination of arborescence-containing arc sets: coefficients sum
// to 1 and every part contains a spanning arborescence of the stated
// direction and root. With padding, the per-arc marginals equal the
// decomposed point exactly.
struct ConvexCombination {
    Direction direction;
    int root;
    std::vector<ConvexPart> parts;
};

struct ScaledCapacities {
    Integer denominator;       // least common multiple of the value denominators
    std::vector<Integer> cap;  // denominator * x, exact integers
};

// Clears denominators so the fractional point becomes an integer capacity
// vector: every cut bound of the arborescence LP scales to `denominator`.
ScaledCapacities common_denominator_scale(const FractionalSolution& x);

// Residual-capacity invariant of the constructive packing: every nonempty
// S avoiding the root needs cap(delta_plus(S)) >= t, and sets made up
// entirely of not-yet-covered vertices need one unit more (the partial
// arborescence under construction still has to leave them). Sets touching
// the covered region can ride arcs that are already paid for. Checked with
// two min-cut families:
//   (a) uncovered-only sets: all covered vertices merge into the root, then
//       min_cut(w -> root) >= t+1 for every uncovered w;
//   (b) everything else: min_cut(w -> root) >= t in the intact graph for
//       every covered w != root.
bool packing_feasible(const Digraph& g, const std::vector<Integer>& cap, int root,
                      const VertexSet& covered, const Integer& t);

// Grows one spanning in-arborescence from the root backwards, always taking
// the smallest-id arc whose removal keeps packing_feasible with t more
// units owed. Decrements `cap` in place and returns the n-1 chosen arcs.
std::vector<int> extract_arborescence(const Digraph& g, std::vector<Integer>& cap,
                                      int root, const Integer& t);

// Convex decomposition: scale x to integer capacities, repeatedly extract
// an arborescence and give it the largest multiplicity the residual
// supports (binary search), then, if pad is set, spread each arc's leftover
// capacity over parts that miss it, splitting parts as needed, so the
// marginals match x exactly. Without padding the marginals are <= x.
// direction::out runs on the reverse graph; arc ids are shared.
ConvexCombination decompose(const Digraph& g, const FractionalSolution& x, int root,
                            Direction direction, bool pad);

// Sum of coefficients over the parts containing the arc.
Rational marginal(const ConvexCombination& comb, int arc_id);

// One line per part: "part <k> coeff <p/q> : <arc ids>".
std::string to_text(const ConvexCombination& comb);

// Index of the part a uniform draw u in [0,1) selects; the enumeration is
// what the guarantees use, this is the sampling view of the same object.
int pick_part(const ConvexCombination& comb, const Rational& u);

}  // namespace wmscss
