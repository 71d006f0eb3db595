#pragma once

#include <map>
#include <stdexcept>
#include <vector>

#include "toric/config.hpp"
#include "toric/matrix.hpp"

namespace toric {

struct NotGradedError : std::runtime_error {
    NotGradedError() : std::runtime_error("configuration is not graded (first row must be all ones)") {}
};

// A face of cone(A), recorded as the exact set of column indices on it plus
// an integer supporting functional h with h.a_j = 0 on the face and
// h.a_j < 0 off it (h = 0 for the full face).
struct Face {
    IndexSet indices;
    IntVec support_functional;
};

namespace detail {

inline std::vector<Face> cone_facets(const Configuration& cfg) {
    std::vector<Face> facets;
    std::map<IndexSet, IntVec> seen;
    int d = cfg.d, n = cfg.n;

    auto try_normal = [&](IntVec h) {
        bool all_le = true, all_ge = true;
        for (int j = 0; j < n; ++j) {
            Int s = 0;
            for (int i = 0; i < d; ++i) s += h[i] * cfg.a[i][j];
            if (s > 0) all_le = false;
            if (s < 0) all_ge = false;
        }
        if (!all_le && !all_ge) return;
        if (all_ge && !all_le) h = neg(h);
        IndexSet idx;
        for (int j = 0; j < n; ++j) {
            Int s = 0;
            for (int i = 0; i < d; ++i) s += h[i] * cfg.a[i][j];
            if (s == 0) idx.insert(j);
        }
        if (static_cast<int>(idx.size()) == n) return;  // h vanishes on all of A
        seen.emplace(idx, h);
    };

    if (d == 1) {
        try_normal({Int(1)});
        try_normal({Int(-1)});
    } else {
        // candidate hyperplanes through d-1 independent columns
        std::vector<int> idx(d - 1);
        auto rec = [&](auto&& self, int pos, int start) -> void {
            if (pos == d - 1) {
                IntMat rows(d - 1, IntVec(d));
                for (int r = 0; r < d - 1; ++r)
                    for (int i = 0; i < d; ++i) rows[r][i] = cfg.a[i][idx[r]];
                auto ns = nullspace(rows);
                if (ns.size() != 1) return;  // columns dependent
                try_normal(ns[0]);
                return;
            }
            for (int j = start; j < cfg.n; ++j) {
                idx[pos] = j;
                self(self, pos + 1, j + 1);
            }
        };
        rec(rec, 0, 0);
    }
    for (auto& [idx, h] : seen) facets.push_back({idx, h});
    return facets;
}

}  // namespace detail

// All faces of cone(A): the full face [n], every facet, and all
// intersections, down to the apex (empty index set) for pointed cones.
inline std::vector<Face> faces_of_cone(const Configuration& cfg) {
    std::vector<Face> facets = detail::cone_facets(cfg);
    std::map<IndexSet, IntVec> faces;
    IndexSet full;
    for (int j = 0; j < cfg.n; ++j) full.insert(j);
    faces.emplace(full, IntVec(cfg.d, 0));
    for (const Face& f : facets) faces.emplace(f.indices, f.support_functional);
    bool grew = true;
    while (grew) {
        grew = false;
        std::vector<std::pair<IndexSet, IntVec>> fresh;
        for (const auto& [idx, h] : faces) {
            for (const Face& f : facets) {
                IndexSet meet = set_intersect(idx, f.indices);
                if (faces.count(meet)) continue;
                fresh.emplace_back(meet, add(h, f.support_functional));
            }
        }
        for (auto& [idx, h] : fresh)
            if (faces.emplace(idx, h).second) grew = true;
    }
    std::vector<Face> out;
    for (auto& [idx, h] : faces) out.push_back({idx, h});
    return out;
}

inline std::vector<Face> proper_faces(const Configuration& cfg) {
    auto all = faces_of_cone(cfg);
    std::erase_if(all, [&](const Face& f) {
        return static_cast<int>(f.indices.size()) == cfg.n;
    });
    return all;
}

inline int face_dimension(const Configuration& cfg, const IndexSet& sigma) {
    if (sigma.empty()) return 0;
    std::vector<int> idx(sigma.begin(), sigma.end());
    return static_cast<int>(rank(columns(cfg.a, idx)));
}

inline bool is_graded(const Configuration& cfg) {
    for (int j = 0; j < cfg.n; ++j)
        if (cfg.a[0][j] != 1) return false;
    return true;
}

// Smoothness of the face of the height-1 polytope R = conv(a_i) indexed by
// sigma: the inner normal cone, restricted to the span of R, must be
// generated by primitive vectors extending to a lattice basis.
// Requires a graded configuration with Z A = Z^d.
inline bool is_smooth_face(const Configuration& cfg, const IndexSet& sigma) {
    if (!is_graded(cfg)) throw NotGradedError();
    if (maximal_minor_gcd(transpose(cfg.a)) != 1)
        throw std::invalid_argument("columns do not span Z^d");
    if (sigma.empty()) throw std::invalid_argument("apex is not a polytope face");

    int r = face_dimension(cfg, sigma);        // dim cone(A_sigma)
    int codim = cfg.d - r;                     // codim of the face in R
    if (codim == 0) return true;               // the full polytope

    std::vector<IntVec> normals;
    for (const Face& f : detail::cone_facets(cfg)) {
        if (!subset(sigma, f.indices)) continue;
        // restrict the functional to the height-1 slice: drop the constant
        IntVec nrm(f.support_functional.begin() + 1, f.support_functional.end());
        normals.push_back(primitive_normalized(nrm));
    }
    if (static_cast<int>(normals.size()) != codim) return false;  // not simplicial
    IntMat nmat(normals.size(), IntVec(cfg.d - 1));
    for (size_t i = 0; i < normals.size(); ++i) nmat[i] = normals[i];
    if (rank(nmat) != normals.size()) return false;
    return maximal_minor_gcd(transpose(nmat)) == 1;
}

}  // namespace toric
