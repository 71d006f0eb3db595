#pragma once

#include <stdexcept>
#include <vector>

#include "toric/config.hpp"
#include "toric/lp.hpp"
#include "toric/matrix.hpp"

namespace toric {

struct UnboundedError : std::runtime_error {
    UnboundedError() : std::runtime_error("polyhedron is unbounded") {}
};

struct FiberTooLargeError : std::runtime_error {
    FiberTooLargeError() : std::runtime_error("fiber exceeds the configured cap") {}
};

// n x (n-d) integer matrix whose columns form a basis of the saturated
// kernel lattice of A.
struct GaleDual {
    IntMat b;
    int n = 0;
    int k = 0;  // n - d

    IntVec row(int i) const {
        IntVec r(k);
        for (int j = 0; j < k; ++j) r[j] = b[i][j];
        return r;
    }
};

inline GaleDual gale_dual(const Configuration& cfg) {
    GaleDual g;
    g.b = kernel_lattice_basis(cfg.a);
    g.n = cfg.n;
    g.k = cfg.n - cfg.d;
    return g;
}

// Wrap a user-supplied matrix, verifying it really is a Gale dual of A.
inline GaleDual gale_dual_from(const Configuration& cfg, const IntMat& b) {
    if (static_cast<int>(nrows(b)) != cfg.n ||
        static_cast<int>(ncols(b)) != cfg.n - cfg.d)
        throw std::invalid_argument("Gale dual has wrong shape");
    for (int i = 0; i < cfg.d; ++i)
        for (int j = 0; j < cfg.n - cfg.d; ++j) {
            Int s = 0;
            for (int l = 0; l < cfg.n; ++l) s += cfg.a[i][l] * b[l][j];
            if (s != 0) throw std::invalid_argument("A B != 0");
        }
    if (rank(b) != static_cast<size_t>(cfg.n - cfg.d))
        throw std::invalid_argument("Gale dual columns are dependent");
    if (cfg.n > cfg.d && maximal_minor_gcd(b) != 1)
        throw std::invalid_argument("Gale dual lattice is not saturated");
    GaleDual g;
    g.b = b;
    g.n = cfg.n;
    g.k = cfg.n - cfg.d;
    return g;
}

// Is v in the column lattice of B? (exact solve, integrality check)
inline bool in_column_lattice(const GaleDual& g, const IntVec& v) {
    if (g.k == 0) return is_zero(v);
    auto z = solve(to_rational(g.b), [&] {
        RatVec r(v.size());
        for (size_t i = 0; i < v.size(); ++i) r[i] = Rat(v[i]);
        return r;
    }());
    if (!z) return false;
    // solve() zero-fills free vars; B has full column rank so the solution is
    // unique, but verify residual and integrality anyway
    for (const Rat& q : *z)
        if (q.get_den() != 1) return false;
    for (size_t i = 0; i < v.size(); ++i) {
        Rat s = 0;
        for (int j = 0; j < g.k; ++j) s += Rat(g.b[i][j]) * (*z)[j];
        if (s != Rat(v[i])) return false;
    }
    return true;
}

struct Fiber {
    IntVec degree;                // b in Z^d
    std::vector<IntVec> points;   // all u in N^n with A u = b, sorted lex
};

// Complete enumeration of pi^{-1}(b). Empty list when b is not in NA.
inline Fiber enumerate_fiber(const Configuration& cfg, const IntVec& b,
                             size_t cap = 1000000) {
    Fiber f;
    f.degree = b;
    int n = cfg.n, d = cfg.d;
    // suffix sign info per row: are all entries in columns j..n-1 nonneg/nonpos
    std::vector<std::vector<bool>> suf_nonneg(d, std::vector<bool>(n + 1, true));
    std::vector<std::vector<bool>> suf_nonpos(d, std::vector<bool>(n + 1, true));
    for (int i = 0; i < d; ++i)
        for (int j = n - 1; j >= 0; --j) {
            suf_nonneg[i][j] = suf_nonneg[i][j + 1] && cfg.a[i][j] >= 0;
            suf_nonpos[i][j] = suf_nonpos[i][j + 1] && cfg.a[i][j] <= 0;
        }

    IntVec u(n, 0);
    IntVec rem = b;  // b - A * (chosen prefix)
    Rat grem = 0;
    for (int i = 0; i < d; ++i) grem += cfg.grading_y[i] * Rat(b[i]);

    auto rec = [&](auto&& self, int j) -> void {
        if (grem < 0) return;
        for (int i = 0; i < d; ++i) {
            if (suf_nonneg[i][j] && rem[i] < 0) return;
            if (suf_nonpos[i][j] && rem[i] > 0) return;
        }
        if (j == n) {
            if (is_zero(rem)) {
                if (f.points.size() >= cap) throw FiberTooLargeError();
                f.points.push_back(u);
            }
            return;
        }
        // grading bound: grading[j] * u_j <= grem
        Rat bound = grem / Rat(cfg.grading[j]);
        Int hi;
        mpz_fdiv_q(hi.get_mpz_t(), bound.get_num().get_mpz_t(),
                   bound.get_den().get_mpz_t());
        for (Int v = 0; v <= hi; ++v) {
            u[j] = v;
            if (v > 0) {
                for (int i = 0; i < d; ++i) rem[i] -= cfg.a[i][j];
                grem -= Rat(cfg.grading[j]);
            }
            self(self, j + 1);
        }
        // undo
        for (int i = 0; i < d; ++i) rem[i] += cfg.a[i][j] * hi;
        grem += Rat(cfg.grading[j]) * Rat(hi);
        u[j] = 0;
    };
    rec(rec, 0);
    std::sort(f.points.begin(), f.points.end());
    return f;
}

// The polytope { z : (B z <= u) restricted to rows off sigma, -(omega B) z <= 0 }.
struct QPolytope {
    GaleDual gale;
    IntVec u;
    IndexSet sigma;
    RatVec omega;  // length n
};

inline RatVec omega_b(const QPolytope& q) {
    RatVec wb(q.gale.k, Rat(0));
    for (int j = 0; j < q.gale.k; ++j)
        for (int i = 0; i < q.gale.n; ++i) wb[j] += q.omega[i] * Rat(q.gale.b[i][j]);
    return wb;
}

// m_z = (u - B z)^- : the smallest sigma-supported shift making u - B z + m
// nonnegative.
inline IntVec m_of_z(const IntVec& u, const IntVec& z, const GaleDual& g) {
    IntVec bz(g.n, 0);
    for (int i = 0; i < g.n; ++i)
        for (int j = 0; j < g.k; ++j) bz[i] += g.b[i][j] * z[j];
    return negative_part(sub(u, bz));
}

// All lattice points of the Q polytope (0 always included), sorted lex.
// Recursive coordinate bounding with exact rational LPs.
inline std::vector<IntVec> lattice_points(const QPolytope& q) {
    int k = q.gale.k;
    std::vector<IntVec> out;
    if (k == 0) {
        out.push_back({});
        return out;
    }
    // constraint rows over z: rows (B_i, u_i) for i off sigma; (-omega B, 0)
    RatMat rows;
    RatVec rhs;
    for (int i = 0; i < q.gale.n; ++i) {
        if (q.sigma.count(i)) continue;
        RatVec r(k);
        for (int j = 0; j < k; ++j) r[j] = Rat(q.gale.b[i][j]);
        rows.push_back(r);
        rhs.push_back(Rat(q.u[i]));
    }
    {
        RatVec wb = omega_b(q);
        RatVec r(k);
        for (int j = 0; j < k; ++j) r[j] = -wb[j];
        rows.push_back(r);
        rhs.push_back(Rat(0));
    }

    IntVec z(k, 0);
    auto rec = [&](auto&& self, int fixed) -> void {
        if (fixed == k) {
            for (size_t i = 0; i < rows.size(); ++i) {
                Rat s = 0;
                for (int j = 0; j < k; ++j) s += rows[i][j] * Rat(z[j]);
                if (s > rhs[i]) return;
            }
            out.push_back(z);
            return;
        }
        // bound coordinate `fixed` subject to rows and already-fixed coords
        LinProg lp(k - fixed);
        for (size_t i = 0; i < rows.size(); ++i) {
            RatVec r(k - fixed);
            Rat shift = rhs[i];
            for (int j = 0; j < fixed; ++j) shift -= rows[i][j] * Rat(z[j]);
            for (int j = fixed; j < k; ++j) r[j - fixed] = rows[i][j];
            lp.add_row(r, -1, shift);
        }
        lp.nonneg.assign(k - fixed, false);
        lp.objective.assign(k - fixed, Rat(0));
        lp.objective[0] = 1;
        lp.maximize = false;
        auto lo = lp_solve(lp);
        if (lo.status == LPStatus::Infeasible) return;
        lp.maximize = true;
        auto hi = lp_solve(lp);
        if (lo.status == LPStatus::Unbounded || hi.status == LPStatus::Unbounded)
            throw UnboundedError();
        Int lo_i, hi_i;
        {
            Rat v = lo.x[0];
            mpz_cdiv_q(lo_i.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
            v = hi.x[0];
            mpz_fdiv_q(hi_i.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
        }
        for (Int v = lo_i; v <= hi_i; ++v) {
            z[fixed] = v;
            self(self, fixed + 1);
        }
        z[fixed] = 0;
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<IntVec> nonzero_lattice_points(const QPolytope& q) {
    std::vector<IntVec> pts = lattice_points(q);
    std::erase_if(pts, [](const IntVec& z) { return is_zero(z); });
    return pts;
}

}  // namespace toric
