#pragma once

#include "wmscss/rational.hpp"

#include <vector>

namespace wmscss {

enum class LpStatus { optimal, infeasible };

struct CoveringLpResult {
    LpStatus status;
    Rational objective;              // meaningful only when optimal
    std::vector<Rational> solution;  // one value per variable, in [0,1]
};

// Solves   min c.x   s.t.   sum_{j in rows[i]} x_j >= 1  for every row,
//                           0 <= x_j <= 1,
// exactly, by two-phase primal simplex with Bland's anti-cycling rule.
// Every pivot is rational arithmetic; the returned solution is a vertex of
// the constraint polytope. A row with empty support makes the LP infeasible.
CoveringLpResult solve_covering_lp(int num_vars,
                                   const std::vector<std::vector<int>>& rows,
                                   const std::vector<Rational>& costs);

}  // namespace wmscss
