#pragma once

#include <stdexcept>
#include <vector>

#include "toric/config.hpp"
#include "toric/lp.hpp"
#include "toric/matrix.hpp"

namespace toric {

struct NotInLatticeError : std::runtime_error {
    NotInLatticeError() : std::runtime_error("vector is not in the kernel lattice of A") {}
};

// The circuits of A: primitive kernel vectors of inclusion-minimal support,
// sign-normalized (first nonzero entry positive), sorted lex. Every support
// is a minimal dependent set of columns, of size at most d+1.
inline std::vector<IntVec> circuits(const Configuration& cfg) {
    std::vector<IntVec> out;
    int n = cfg.n, d = cfg.d;
    std::vector<int> idx;
    auto rec = [&](auto&& self, int start) -> void {
        int k = static_cast<int>(idx.size());
        if (k >= 2) {
            IntMat sub = columns(cfg.a, idx);
            size_t r = rank(sub);
            if (r == static_cast<size_t>(k) - 1) {
                auto ns = nullspace(sub);
                if (ns.size() == 1) {
                    const IntVec& kv = ns[0];
                    bool full = true;
                    for (const Int& x : kv)
                        if (x == 0) full = false;
                    if (full) {
                        IntVec c(n, 0);
                        for (int i = 0; i < k; ++i) c[idx[i]] = kv[i];
                        out.push_back(primitive_normalized(c));
                    }
                }
                return;  // dependent set: no proper superset is minimal
            }
        }
        if (k == d + 1) return;
        for (int j = start; j < n; ++j) {
            idx.push_back(j);
            self(self, j + 1);
            idx.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// v = sum q_i c_i over circuits conformal to v with q_i > 0 rational,
// at most n-d terms (a basic solution of the exact LP).
inline std::vector<std::pair<IntVec, Rat>> conformal_decomposition(
    const Configuration& cfg, const IntVec& v, const std::vector<IntVec>& circs) {
    if (!is_zero(matvec(cfg.a, v))) throw NotInLatticeError();
    if (is_zero(v)) return {};
    IndexSet vplus = support(positive_part(v)), vminus = support(negative_part(v));
    std::vector<IntVec> conformal;
    for (const IntVec& c : circs) {
        for (int s : {1, -1}) {
            IntVec cs = s == 1 ? c : neg(c);
            if (subset(support(positive_part(cs)), vplus) &&
                subset(support(negative_part(cs)), vminus))
                conformal.push_back(cs);
        }
    }
    LinProg lp(static_cast<int>(conformal.size()));
    for (int r = 0; r < cfg.n; ++r) {
        RatVec row(conformal.size());
        for (size_t j = 0; j < conformal.size(); ++j) row[j] = Rat(conformal[j][r]);
        lp.add_row(row, 0, Rat(v[r]));
    }
    auto res = lp_solve(lp);
    if (res.status != LPStatus::Optimal)
        throw std::logic_error("conformal decomposition infeasible");
    std::vector<std::pair<IntVec, Rat>> terms;
    for (size_t j = 0; j < conformal.size(); ++j)
        if (res.x[j] > 0) terms.emplace_back(conformal[j], res.x[j]);
    return terms;
}

// Smallest s from the decomposition denominators: s v is a nonnegative
// integer combination of conformal circuits, so x^{s v+} - x^{s v-} lies in
// the circuit ideal.
inline Int circuit_scaling_multiplier(const Configuration& cfg, const IntVec& v,
                                      const std::vector<IntVec>& circs) {
    auto terms = conformal_decomposition(cfg, v, circs);
    Int s = 1;
    for (const auto& [c, q] : terms) s = lcm(s, q.get_den());
    return s;
}

}  // namespace toric
