#pragma once

#include <cassert>
#include <optional>
#include <stdexcept>
#include <vector>

#include "toric/arith.hpp"

namespace toric {

// Dense row-major matrices; all exact arithmetic.
using IntMat = std::vector<IntVec>;
using RatMat = std::vector<RatVec>;

inline size_t nrows(const IntMat& m) { return m.size(); }
inline size_t ncols(const IntMat& m) { return m.empty() ? 0 : m[0].size(); }

inline RatMat to_rational(const IntMat& m) {
    RatMat r(m.size());
    for (size_t i = 0; i < m.size(); ++i) {
        r[i].resize(m[i].size());
        for (size_t j = 0; j < m[i].size(); ++j) r[i][j] = Rat(m[i][j]);
    }
    return r;
}

inline IntVec matvec(const IntMat& m, const IntVec& v) {
    IntVec r(m.size(), 0);
    for (size_t i = 0; i < m.size(); ++i) r[i] = dot(m[i], v);
    return r;
}

inline IntMat transpose(const IntMat& m) {
    IntMat t(ncols(m), IntVec(nrows(m)));
    for (size_t i = 0; i < nrows(m); ++i)
        for (size_t j = 0; j < ncols(m); ++j) t[j][i] = m[i][j];
    return t;
}

inline IntMat columns(const IntMat& m, const std::vector<int>& idx) {
    IntMat r(nrows(m), IntVec(idx.size()));
    for (size_t i = 0; i < nrows(m); ++i)
        for (size_t j = 0; j < idx.size(); ++j) r[i][j] = m[i][idx[j]];
    return r;
}

// Gaussian elimination in place; returns rank. Rows are swapped, pivot
// columns recorded if requested.
inline size_t row_reduce(RatMat& m, std::vector<int>* pivot_cols = nullptr) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    size_t r = 0;
    for (size_t c = 0; c < cols && r < rows; ++c) {
        size_t p = r;
        while (p < rows && m[p][c] == 0) ++p;
        if (p == rows) continue;
        std::swap(m[p], m[r]);
        Rat inv = 1 / m[r][c];
        for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
        for (size_t i = 0; i < rows; ++i) {
            if (i == r || m[i][c] == 0) continue;
            Rat f = m[i][c];
            for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
        }
        if (pivot_cols) pivot_cols->push_back(static_cast<int>(c));
        ++r;
    }
    return r;
}

inline size_t rank(const IntMat& m) {
    RatMat r = to_rational(m);
    return row_reduce(r);
}

inline Int det(const IntMat& m) {
    // Bareiss fraction-free elimination
    size_t n = m.size();
    assert(n == ncols(m));
    IntMat a = m;
    Int sign = 1, prev = 1;
    for (size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            size_t p = k + 1;
            while (p < n && a[p][k] == 0) ++p;
            if (p == n) return 0;
            std::swap(a[p], a[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j) {
                a[i][j] = (a[k][k] * a[i][j] - a[i][k] * a[k][j]) / prev;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
    }
    return n == 0 ? Int(1) : sign * a[n - 1][n - 1];
}

// Solve M x = rhs over Q. Empty optional when inconsistent; if the system is
// underdetermined an arbitrary solution (free variables = 0) is returned.
inline std::optional<RatVec> solve(const RatMat& m, const RatVec& rhs) {
    size_t rows = m.size();
    size_t cols = rows ? m[0].size() : 0;
    RatMat aug(rows, RatVec(cols + 1));
    for (size_t i = 0; i < rows; ++i) {
        for (size_t j = 0; j < cols; ++j) aug[i][j] = m[i][j];
        aug[i][cols] = rhs[i];
    }
    std::vector<int> piv;
    row_reduce(aug, &piv);
    RatVec x(cols, Rat(0));
    size_t r = 0;
    for (; r < piv.size(); ++r) {
        if (piv[r] == static_cast<int>(cols)) return std::nullopt;  // 0 = 1 row
        x[piv[r]] = aug[r][cols];
    }
    for (size_t i = piv.size(); i < rows; ++i)
        if (aug[i][cols] != 0) return std::nullopt;
    return x;
}

// Basis of the rational nullspace of M, cleared to primitive integer vectors.
inline std::vector<IntVec> nullspace(const IntMat& m) {
    size_t cols = ncols(m);
    RatMat r = to_rational(m);
    std::vector<int> piv;
    row_reduce(r, &piv);
    std::vector<bool> is_pivot(cols, false);
    for (int c : piv) is_pivot[c] = true;
    std::vector<IntVec> basis;
    for (size_t free = 0; free < cols; ++free) {
        if (is_pivot[free]) continue;
        RatVec v(cols, Rat(0));
        v[free] = 1;
        for (size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -r[i][free];
        Int den = 1;
        for (const Rat& q : v) den = lcm(den, q.get_den());
        IntVec iv(cols);
        for (size_t j = 0; j < cols; ++j) {
            Rat q = v[j] * Rat(den);
            iv[j] = q.get_num();
        }
        basis.push_back(primitive_normalized(iv));
    }
    return basis;
}

// Lattice basis of ker_Z(A) via unimodular column reduction: columns of U
// tracking column operations that bring A to column echelon form. The
// resulting basis spans the saturated kernel lattice exactly.
inline IntMat kernel_lattice_basis(const IntMat& a) {
    size_t rowsA = nrows(a), colsA = ncols(a);
    IntMat m = a;
    IntMat u(colsA, IntVec(colsA, 0));
    for (size_t i = 0; i < colsA; ++i) u[i][i] = 1;  // u is n x n, column ops mirrored

    auto col_swap = [&](size_t j, size_t k) {
        for (size_t i = 0; i < rowsA; ++i) std::swap(m[i][j], m[i][k]);
        for (size_t i = 0; i < colsA; ++i) std::swap(u[i][j], u[i][k]);
    };
    // columns j,k <- (p*col_j + q*col_k, r*col_j + s*col_k), ps - qr = +-1
    auto col_combine = [&](size_t j, size_t k, const Int& p, const Int& q,
                           const Int& r, const Int& s) {
        for (size_t i = 0; i < rowsA; ++i) {
            Int mj = m[i][j], mk = m[i][k];
            m[i][j] = p * mj + q * mk;
            m[i][k] = r * mj + s * mk;
        }
        for (size_t i = 0; i < colsA; ++i) {
            Int uj = u[i][j], uk = u[i][k];
            u[i][j] = p * uj + q * uk;
            u[i][k] = r * uj + s * uk;
        }
    };

    size_t lead = 0;  // number of settled (independent) columns
    for (size_t row = 0; row < rowsA && lead < colsA; ++row) {
        size_t p = lead;
        while (p < colsA && m[row][p] == 0) ++p;
        if (p == colsA) continue;
        col_swap(lead, p);
        for (size_t k = lead + 1; k < colsA; ++k) {
            if (m[row][k] == 0) continue;
            Int g, x, y;
            mpz_gcdext(g.get_mpz_t(), x.get_mpz_t(), y.get_mpz_t(),
                       m[row][lead].get_mpz_t(), m[row][k].get_mpz_t());
            Int aa = m[row][lead] / g, bb = m[row][k] / g;
            // [x y; -bb aa] has determinant x*aa + y*bb = 1
            col_combine(lead, k, x, y, -bb, aa);
        }
        ++lead;
    }
    // kernel basis: columns lead..colsA-1 of u
    IntMat basis(colsA, IntVec(colsA - lead));
    for (size_t i = 0; i < colsA; ++i)
        for (size_t j = lead; j < colsA; ++j) basis[i][j - lead] = u[i][j];
    return basis;  // n x (n - rank)
}

// gcd of all maximal minors (k x k for an n x k matrix, n >= k).
// Equals 1 iff the column lattice is saturated in Z^n.
inline Int maximal_minor_gcd(const IntMat& m) {
    size_t n = nrows(m), k = ncols(m);
    if (k == 0) return 1;
    assert(n >= k);
    std::vector<int> idx(k);
    for (size_t i = 0; i < k; ++i) idx[i] = static_cast<int>(i);
    Int g = 0;
    while (true) {
        IntMat sub(k, IntVec(k));
        for (size_t i = 0; i < k; ++i)
            for (size_t j = 0; j < k; ++j) sub[i][j] = m[idx[i]][j];
        g = gcd(g, det(sub));
        // next combination
        int pos = static_cast<int>(k) - 1;
        while (pos >= 0 && idx[pos] == static_cast<int>(n - k + pos)) --pos;
        if (pos < 0) break;
        ++idx[pos];
        for (size_t i = pos + 1; i < k; ++i) idx[i] = idx[i - 1] + 1;
    }
    return g;
}

}  // namespace toric
