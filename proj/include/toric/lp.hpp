#pragma once

#include <cassert>
#include <vector>

#include "toric/arith.hpp"
#include "toric/matrix.hpp"

namespace toric {

enum class LPStatus { Optimal, Infeasible, Unbounded };

// General-form exact LP:
//   optimize objective . x   subject to   A x (rel) b
// rel per row: -1 for <=, 0 for ==, +1 for >=. Variables marked nonneg are
// constrained to x_i >= 0, the rest are free.
struct LinProg {
    int nvars = 0;
    std::vector<bool> nonneg;
    RatMat a;
    std::vector<int> rel;
    RatVec b;
    RatVec objective;
    bool maximize = false;

    explicit LinProg(int n) : nvars(n), nonneg(n, true), objective(n, Rat(0)) {}

    void add_row(const RatVec& row, int relation, const Rat& rhs) {
        a.push_back(row);
        rel.push_back(relation);
        b.push_back(rhs);
    }
};

struct LinProgResult {
    LPStatus status = LPStatus::Infeasible;
    RatVec x;
    Rat value;
};

namespace detail {

// Bland-rule two-phase simplex on min c.x, A x = b, x >= 0.
// Returns status; on Optimal fills x.
inline LPStatus simplex_standard(RatMat a, RatVec b, RatVec c, RatVec& x) {
    size_t m = a.size();
    size_t n = m ? a[0].size() : c.size();
    for (size_t i = 0; i < m; ++i) {
        if (b[i] < 0) {
            for (size_t j = 0; j < n; ++j) a[i][j] = -a[i][j];
            b[i] = -b[i];
        }
    }
    // tableau with artificial variables appended
    size_t total = n + m;
    RatMat t(m, RatVec(total + 1, Rat(0)));
    for (size_t i = 0; i < m; ++i) {
        for (size_t j = 0; j < n; ++j) t[i][j] = a[i][j];
        t[i][n + i] = 1;
        t[i][total] = b[i];
    }
    std::vector<size_t> basis(m);
    for (size_t i = 0; i < m; ++i) basis[i] = n + i;

    auto pivot = [&](size_t r, size_t col) {
        Rat inv = 1 / t[r][col];
        for (size_t j = 0; j <= total; ++j) t[r][j] *= inv;
        for (size_t i = 0; i < m; ++i) {
            if (i == r || t[i][col] == 0) continue;
            Rat f = t[i][col];
            for (size_t j = 0; j <= total; ++j) t[i][j] -= f * t[r][j];
        }
        basis[r] = col;
    };

    auto run = [&](const RatVec& cost, size_t ncols) -> bool {
        // returns false when unbounded
        while (true) {
            RatVec red(ncols, Rat(0));  // reduced costs
            RatVec y(m, Rat(0));        // multipliers: y_i = cost of basis var i
            for (size_t i = 0; i < m; ++i) y[i] = cost[basis[i]];
            size_t enter = ncols;
            for (size_t j = 0; j < ncols; ++j) {
                Rat rj = cost[j];
                for (size_t i = 0; i < m; ++i)
                    if (t[i][j] != 0) rj -= y[i] * t[i][j];
                red[j] = rj;
                if (rj < 0) {
                    enter = j;
                    break;  // Bland: smallest index
                }
            }
            if (enter == ncols) return true;
            size_t leave = m;
            Rat best;
            for (size_t i = 0; i < m; ++i) {
                if (t[i][enter] <= 0) continue;
                Rat ratio = t[i][total] / t[i][enter];
                if (leave == m || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave == m) return false;
            pivot(leave, enter);
        }
    };

    // phase 1
    RatVec cost1(total, Rat(0));
    for (size_t j = n; j < total; ++j) cost1[j] = 1;
    run(cost1, total);
    Rat p1 = 0;
    for (size_t i = 0; i < m; ++i)
        if (basis[i] >= n) p1 += t[i][total];
    if (p1 != 0) return LPStatus::Infeasible;
    // drive artificials out of the basis where possible
    for (size_t i = 0; i < m; ++i) {
        if (basis[i] < n) continue;
        size_t col = n;
        for (size_t j = 0; j < n; ++j)
            if (t[i][j] != 0) {
                col = j;
                break;
            }
        if (col < n) pivot(i, col);
        // else: redundant row, harmless to keep with artificial at 0
    }
    // phase 2 over original columns only
    RatVec cost2(total, Rat(0));
    for (size_t j = 0; j < n; ++j) cost2[j] = c[j];
    if (!run(cost2, n)) return LPStatus::Unbounded;
    x.assign(n, Rat(0));
    for (size_t i = 0; i < m; ++i)
        if (basis[i] < n) x[basis[i]] = t[i][total];
    return LPStatus::Optimal;
}

}  // namespace detail

inline LinProgResult lp_solve(const LinProg& p) {
    // columns of the standard form: for each variable, one column (nonneg)
    // or a split pair (free); one slack per inequality row
    size_t cols = 0;
    std::vector<std::pair<size_t, size_t>> varcol(p.nvars);
    for (int v = 0; v < p.nvars; ++v) {
        if (p.nonneg[v]) {
            varcol[v] = {cols, SIZE_MAX};
            cols += 1;
        } else {
            varcol[v] = {cols, cols + 1};
            cols += 2;
        }
    }
    size_t slack_base = cols;
    for (int r : p.rel)
        if (r != 0) cols += 1;

    size_t m = p.a.size();
    RatMat a(m, RatVec(cols, Rat(0)));
    RatVec b = p.b;
    size_t slack = slack_base;
    for (size_t i = 0; i < m; ++i) {
        for (int v = 0; v < p.nvars; ++v) {
            const Rat& coef = p.a[i][v];
            if (coef == 0) continue;
            a[i][varcol[v].first] = coef;
            if (varcol[v].second != SIZE_MAX) a[i][varcol[v].second] = -coef;
        }
        if (p.rel[i] == -1) a[i][slack++] = 1;
        if (p.rel[i] == +1) a[i][slack++] = -1;
    }
    RatVec c(cols, Rat(0));
    for (int v = 0; v < p.nvars; ++v) {
        Rat coef = p.objective[v];
        if (p.maximize) coef = -coef;
        c[varcol[v].first] = coef;
        if (varcol[v].second != SIZE_MAX) c[varcol[v].second] = -coef;
    }

    LinProgResult res;
    RatVec sol;
    res.status = detail::simplex_standard(a, b, c, sol);
    if (res.status != LPStatus::Optimal) return res;
    res.x.assign(p.nvars, Rat(0));
    for (int v = 0; v < p.nvars; ++v) {
        res.x[v] = sol[varcol[v].first];
        if (varcol[v].second != SIZE_MAX) res.x[v] -= sol[varcol[v].second];
    }
    res.value = 0;
    for (int v = 0; v < p.nvars; ++v) res.value += p.objective[v] * res.x[v];
    return res;
}

// Farkas-style test: is target in the cone spanned by the given generators?
// (exists lambda >= 0 with sum lambda_i gen_i = target)
inline bool in_nonnegative_span(const std::vector<IntVec>& gens, const IntVec& target) {
    size_t dim = target.size();
    LinProg lp(static_cast<int>(gens.size()));
    for (size_t r = 0; r < dim; ++r) {
        RatVec row(gens.size());
        for (size_t j = 0; j < gens.size(); ++j) row[j] = Rat(gens[j][r]);
        lp.add_row(row, 0, Rat(target[r]));
    }
    return lp_solve(lp).status == LPStatus::Optimal;
}

}  // namespace toric
