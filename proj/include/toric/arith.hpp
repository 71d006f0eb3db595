#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstddef>
#include <set>
#include <string>
#include <vector>

namespace toric {

using Int = mpz_class;
using Rat = mpq_class;
using IntVec = std::vector<Int>;
using RatVec = std::vector<Rat>;
using IndexSet = std::set<int>;

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// gcd of all entries, nonnegative; 0 for the zero vector
inline Int content(const IntVec& v) {
    Int g = 0;
    for (const Int& x : v) g = gcd(g, x);
    return g;
}

inline bool is_zero(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x == 0; });
}

inline IntVec add(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

inline IntVec sub(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline IntVec neg(const IntVec& a) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
    return r;
}

inline IntVec scale(const Int& s, const IntVec& a) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = s * a[i];
    return r;
}

inline Int dot(const IntVec& a, const IntVec& b) {
    Int s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

inline Rat dot(const RatVec& a, const IntVec& b) {
    Rat s = 0;
    for (size_t i = 0; i < a.size(); ++i) s += a[i] * Rat(b[i]);
    return s;
}

// componentwise positive part (v_i for v_i > 0, else 0)
inline IntVec positive_part(const IntVec& v) {
    IntVec r(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] > 0) r[i] = v[i];
    return r;
}

inline IntVec negative_part(const IntVec& v) {
    IntVec r(v.size(), 0);
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] < 0) r[i] = -v[i];
    return r;
}

inline IntVec cmax(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::max(a[i], b[i]);
    return r;
}

inline IntVec cmin(const IntVec& a, const IntVec& b) {
    IntVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = std::min(a[i], b[i]);
    return r;
}

inline IndexSet support(const IntVec& v) {
    IndexSet s;
    for (size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) s.insert(static_cast<int>(i));
    return s;
}

// a <= b componentwise (monomial divisibility when both nonnegative)
inline bool leq(const IntVec& a, const IntVec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline bool is_nonnegative(const IntVec& v) {
    return std::all_of(v.begin(), v.end(), [](const Int& x) { return x >= 0; });
}

// divide by the content and flip so the first nonzero entry is positive
inline IntVec primitive_normalized(IntVec v) {
    Int g = content(v);
    if (g == 0) return v;
    for (Int& x : v) x /= g;
    for (const Int& x : v) {
        if (x != 0) {
            if (x < 0)
                for (Int& y : v) y = -y;
            break;
        }
    }
    return v;
}

inline bool subset(const IndexSet& a, const IndexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

inline IndexSet set_intersect(const IndexSet& a, const IndexSet& b) {
    IndexSet r;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                          std::inserter(r, r.begin()));
    return r;
}

inline IndexSet set_union(const IndexSet& a, const IndexSet& b) {
    IndexSet r = a;
    r.insert(b.begin(), b.end());
    return r;
}

inline IndexSet complement(const IndexSet& a, int n) {
    IndexSet r;
    for (int i = 0; i < n; ++i)
        if (!a.count(i)) r.insert(i);
    return r;
}

inline std::string to_string(const IntVec& v) {
    std::string s = "(";
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s + ")";
}

}  // namespace toric
