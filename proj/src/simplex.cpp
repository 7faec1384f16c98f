#include "wmscss/simplex.hpp"

#include <stdexcept>

namespace wmscss {

namespace {

// Dense tableau over rationals. Rows are the constraint rows in equality
// form, each of width cols+1 with the rhs in the last slot; zrow carries the
// reduced costs and, in its last slot, minus the objective value.
struct Tableau {
    std::vector<std::vector<Rational>> rows;
    std::vector<Rational> zrow;
    std::vector<int> basis;  // basic column per row
    int cols;

    void pivot(int r, int s) {
        auto& prow = rows[r];
        Rational inv = prow[s];
        for (auto& v : prow) v /= inv;
        for (std::size_t k = 0; k < rows.size(); ++k) {
            if (static_cast<int>(k) == r || rows[k][s] == 0) continue;
            Rational factor = rows[k][s];
            for (int j = 0; j <= cols; ++j) rows[k][j] -= factor * prow[j];
        }
        if (zrow[s] != 0) {
            Rational factor = zrow[s];
            for (int j = 0; j <= cols; ++j) zrow[j] -= factor * prow[j];
        }
        basis[r] = s;
    }

    // Reduced costs for the given objective under the current basis.
    void reset_objective(const std::vector<Rational>& costs) {
        zrow.assign(cols + 1, Rational(0));
        for (int j = 0; j < cols; ++j) zrow[j] = costs[j];
        for (std::size_t i = 0; i < rows.size(); ++i) {
            const Rational& cb = costs[basis[i]];
            if (cb == 0) continue;
            for (int j = 0; j <= cols; ++j) zrow[j] -= cb * rows[i][j];
        }
    }

    // Bland: smallest improving column enters, smallest basic variable among
    // the minimum-ratio rows leaves. Runs until no column improves.
    void optimize(int max_col) {
        for (;;) {
            int enter = -1;
            for (int j = 0; j < max_col; ++j)
                if (zrow[j] < 0) {
                    enter = j;
                    break;
                }
            if (enter == -1) return;

            int leave = -1;
            Rational best_ratio;
            for (std::size_t i = 0; i < rows.size(); ++i) {
                if (rows[i][enter] <= 0) continue;
                Rational ratio = rows[i][cols] / rows[i][enter];
                if (leave == -1 || ratio < best_ratio ||
                    (ratio == best_ratio && basis[i] < basis[leave])) {
                    leave = static_cast<int>(i);
                    best_ratio = ratio;
                }
            }
            if (leave == -1) throw std::logic_error("covering LP cannot be unbounded");
            pivot(leave, enter);
        }
    }
};

}  // namespace

CoveringLpResult solve_covering_lp(int num_vars,
                                   const std::vector<std::vector<int>>& rows,
                                   const std::vector<Rational>& costs) {
    if (static_cast<int>(costs.size()) != num_vars)
        throw std::invalid_argument("cost vector does not match variable count");

    int n = num_vars;
    int r = static_cast<int>(rows.size());
    // columns: x[0..n), surplus s[n..n+r), box slack u[n+r..2n+r),
    // artificials a[2n+r..2n+2r)
    int art_start = 2 * n + r;
    int cols = 2 * n + 2 * r;

    Tableau t;
    t.cols = cols;
    t.basis.reserve(r + n);
    t.rows.reserve(r + n);
    for (int i = 0; i < r; ++i) {
        std::vector<Rational> row(cols + 1, Rational(0));
        for (int j : rows[i]) {
            if (j < 0 || j >= n) throw std::invalid_argument("row references unknown variable");
            row[j] = 1;
        }
        row[n + i] = -1;            // surplus
        row[art_start + i] = 1;     // artificial, initially basic
        row[cols] = 1;
        t.rows.push_back(std::move(row));
        t.basis.push_back(art_start + i);
    }
    for (int j = 0; j < n; ++j) {
        std::vector<Rational> row(cols + 1, Rational(0));
        row[j] = 1;
        row[n + r + j] = 1;  // box slack, initially basic
        row[cols] = 1;
        t.rows.push_back(std::move(row));
        t.basis.push_back(n + r + j);
    }

    // Phase 1: drive the artificials to zero.
    if (r > 0) {
        std::vector<Rational> phase1(cols, Rational(0));
        for (int i = 0; i < r; ++i) phase1[art_start + i] = 1;
        t.reset_objective(phase1);
        t.optimize(cols);
        if (-t.zrow[cols] > 0)
            return CoveringLpResult{LpStatus::infeasible, Rational(0), {}};

        // Pivot leftover artificials out of the basis; a row that cannot be
        // pivoted is redundant and gets dropped.
        for (std::size_t i = 0; i < t.rows.size();) {
            if (t.basis[i] < art_start) {
                ++i;
                continue;
            }
            int target = -1;
            for (int j = 0; j < art_start; ++j)
                if (t.rows[i][j] != 0) {
                    target = j;
                    break;
                }
            if (target == -1) {
                t.rows.erase(t.rows.begin() + i);
                t.basis.erase(t.basis.begin() + i);
            } else {
                t.pivot(static_cast<int>(i), target);
                ++i;
            }
        }
    }

    // Phase 2 on the real costs; artificial columns are never re-entered.
    std::vector<Rational> phase2(cols, Rational(0));
    for (int j = 0; j < n; ++j) phase2[j] = costs[j];
    t.reset_objective(phase2);
    t.optimize(art_start);

    std::vector<Rational> solution(n, Rational(0));
    for (std::size_t i = 0; i < t.rows.size(); ++i)
        if (t.basis[i] < n) solution[t.basis[i]] = t.rows[i][cols];

    Rational objective = 0;
    for (int j = 0; j < n; ++j) objective += costs[j] * solution[j];
    return CoveringLpResult{LpStatus::optimal, std::move(objective), std::move(solution)};
}

}  // namespace wmscss
