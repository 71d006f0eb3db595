#pragma once

#include <stdexcept>
#include <utility>

#include "toric/lp.hpp"
#include "toric/matrix.hpp"

namespace toric {

struct RankDeficientError : std::runtime_error {
    RankDeficientError() : std::runtime_error("matrix does not have full row rank") {}
};

struct NotPointedError : std::runtime_error {
    IntVec counterexample;  // nonzero u >= 0 with A u = 0
    explicit NotPointedError(IntVec u)
        : std::runtime_error("kernel meets the nonnegative orthant"),
          counterexample(std::move(u)) {}
};

// A vector configuration: the d x n integer matrix A of full row rank whose
// integer kernel meets N^n only in 0. `grading` is a strictly positive
// integer vector in the row span of A, the pointedness certificate.
struct Configuration {
    IntMat a;
    int d = 0;
    int n = 0;
    IntVec grading;   // length n, all entries >= 1
    RatVec grading_y; // grading = y^T A

    IntVec column(int j) const {
        IntVec col(d);
        for (int i = 0; i < d; ++i) col[i] = a[i][j];
        return col;
    }
};

inline Configuration check_configuration(const IntMat& a) {
    if (a.empty() || a[0].empty()) throw std::invalid_argument("empty matrix");
    int d = static_cast<int>(nrows(a));
    int n = static_cast<int>(ncols(a));
    if (rank(a) != static_cast<size_t>(d)) throw RankDeficientError();

    // pointedness: find y with y^T A >= 1 componentwise
    LinProg lp(d);
    lp.nonneg.assign(d, false);
    for (int j = 0; j < n; ++j) {
        RatVec row(d);
        for (int i = 0; i < d; ++i) row[i] = Rat(a[i][j]);
        lp.add_row(row, 1, Rat(1));
    }
    auto res = lp_solve(lp);
    if (res.status != LPStatus::Optimal) {
        // Farkas counterexample: nonzero u >= 0 with A u = 0
        LinProg dual(n);
        for (int i = 0; i < d; ++i) {
            RatVec row(n);
            for (int j = 0; j < n; ++j) row[j] = Rat(a[i][j]);
            dual.add_row(row, 0, Rat(0));
        }
        for (int j = 0; j < n; ++j) {
            RatVec row(n, Rat(0));
            row[j] = 1;
            dual.add_row(row, -1, Rat(1));
        }
        RatVec ones(n, Rat(1));
        dual.objective = ones;
        dual.maximize = true;
        auto cex = lp_solve(dual);
        IntVec u(n, 0);
        if (cex.status == LPStatus::Optimal && cex.value > 0) {
            Int den = 1;
            for (const Rat& q : cex.x) den = lcm(den, q.get_den());
            for (int j = 0; j < n; ++j) u[j] = Rat(cex.x[j] * den).get_num();
            u = primitive_normalized(u);
        }
        throw NotPointedError(u);
    }

    Configuration cfg;
    cfg.a = a;
    cfg.d = d;
    cfg.n = n;
    cfg.grading_y = res.x;
    Int den = 1;
    for (const Rat& q : res.x) den = lcm(den, q.get_den());
    for (Rat& q : cfg.grading_y) q *= den;
    cfg.grading.assign(n, 0);
    for (int j = 0; j < n; ++j) {
        Rat g = 0;
        for (int i = 0; i < d; ++i) g += cfg.grading_y[i] * Rat(a[i][j]);
        cfg.grading[j] = g.get_num();  // integral by construction
    }
    return cfg;
}

// the grading value y.b of a degree b (integral for b in NA when grading_y
// was scaled integral)
inline Int grading_value(const Configuration& cfg, const IntVec& b) {
    Rat s = 0;
    for (int i = 0; i < cfg.d; ++i) s += cfg.grading_y[i] * Rat(b[i]);
    if (s.get_den() != 1) {
        // can only happen for b outside Z-span evaluations; round down
        Int q;
        mpz_fdiv_q(q.get_mpz_t(), s.get_num().get_mpz_t(), s.get_den().get_mpz_t());
        return q;
    }
    return s.get_num();
}

}  // namespace toric
