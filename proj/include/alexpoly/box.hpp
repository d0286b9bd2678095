#pragma once

#include <cstddef>
#include <numeric>
#include <string>
#include <vector>

namespace alexpoly {

// Value vector v = (v_1, ..., v_r).
using value_vec = std::vector<int>;

// Canonical term/table order: by total degree, ties broken lexicographically
// with the first coordinate most significant and larger entries first, so
// (1,0) precedes (0,1).
struct graded_lex_less {
    bool operator()(const value_vec& a, const value_vec& b) const {
        const long sa = std::accumulate(a.begin(), a.end(), 0L);
        const long sb = std::accumulate(b.begin(), b.end(), 0L);
        if (sa != sb) return sa < sb;
        return b < a; // same grade: lexicographically larger vector first
    }
};

inline long vec_sum(const value_vec& v) { return std::accumulate(v.begin(), v.end(), 0L); }

inline value_vec vec_add(value_vec a, const value_vec& b) {
    for (size_t i = 0; i < a.size(); ++i) a[i] += b[i];
    return a;
}

// v + 1_S for the subset S encoded as a bitmask.
inline value_vec add_subset_ones(value_vec v, unsigned mask) {
    for (size_t i = 0; i < v.size(); ++i)
        if (mask & (1u << i)) ++v[i];
    return v;
}

inline value_vec vec_plus_ones(value_vec v) {
    for (int& x : v) ++x;
    return v;
}

inline bool leq_componentwise(const value_vec& a, const value_vec& b) {
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

// Odometer step through the product box [lo, hi]; returns false after the
// last point. Start from v = lo.
inline bool next_in_box(value_vec& v, const value_vec& lo, const value_vec& hi) {
    for (size_t i = v.size(); i-- > 0;) {
        if (v[i] < hi[i]) {
            ++v[i];
            return true;
        }
        v[i] = lo[i];
    }
    return false;
}

// All lattice points of [lo, hi] in graded-lex order.
std::vector<value_vec> graded_lex_points(const value_vec& lo, const value_vec& hi);

std::string vec_str(const value_vec& v); // "(1, 0)"

} // namespace alexpoly
