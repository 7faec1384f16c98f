#pragma once

#include "wmscss/digraph.hpp"
#include "wmscss/maxflow.hpp"

#include <optional>
#include <vector>

namespace wmscss {

// Arc-indexed fractional point x in [0,1]^A for a particular digraph.
// Construction validates the box and the dimension; the pairing with its
// graph is re-checked at every operation boundary.
class FractionalSolution {
public:
    FractionalSolution(const Digraph& g, std::vector<Rational> values);

    const std::vector<Rational>& values() const { return values_; }
    const Rational& value(int arc_id) const { return values_.at(arc_id); }
    int arc_count() const { return static_cast<int>(values_.size()); }

    // Smallest non-zero entry f (so x lies in P_f); nullopt for the zero
    // vector. 0 < f <= 1 always holds when present.
    std::optional<Rational> min_nonzero_entry() const;

private:
    std::vector<Rational> values_;
};

std::optional<Rational> min_nonzero_entry(const FractionalSolution& x);

// True iff every entry is 0 or >= f, i.e. no entry falls in the open
// interval (0, f).
bool entries_clear_of(const FractionalSolution& x, const Rational& f);

Rational weight_of(const Digraph& g, const FractionalSolution& x);

struct FeasibilityCheck {
    bool feasible;
    std::optional<CutCertificate> violated;  // a cut of value < 1 when infeasible
};

// Cut-covering feasibility: x(delta_plus(S)) >= 1 for every proper nonempty
// S. Checked with 2(n-1) max-flows between vertex 0 and every other vertex.
FeasibilityCheck check_wmscss_feasible(const Digraph& g, const FractionalSolution& x);

// Rooted variant: only cuts avoiding the root constrain x. direction::in
// uses leaving arcs, direction::out the entering ones (solved on the
// reverse graph; the certificate is normalized back to leaving form by
// complementing its side).
FeasibilityCheck check_arborescence_lp_feasible(const Digraph& g,
                                                const FractionalSolution& x,
                                                int root, Direction direction);

// Caps raw entries at 1. Feasibility survives: a cut with an entry >= 1
// keeps value >= 1 and every other cut is unchanged.
FractionalSolution truncate_to_box(const Digraph& g, const std::vector<Rational>& raw);

struct LpOutcome {
    FractionalSolution solution;
    Rational objective;                       // w . x, recomputed independently
    std::vector<CutCertificate> generated_cuts;  // every separation round's cut
};

// Optimal point of the cut-covering LP with box constraints 0 <= x <= 1,
// found by row generation: exact simplex on the current rows, then a
// min-cut separation sweep; violated cuts become new rows until none
// remain. Throws InfeasibleError with a zero-value witness cut when g is
// not strongly connected.
LpOutcome solve_wmscss_lp(const Digraph& g);

}  // namespace wmscss
