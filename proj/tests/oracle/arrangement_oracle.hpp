#pragma once

// Independent oracle for the Euler characteristic of the projectivized fiber
// over v: builds the intersection lattice of the coordinate-hyperplane
// arrangement inside C(v) from the subspace dimensions d(S, v), computes the
// Moebius function by recursion over the flats, and sums mu(X) * chi(P(X))
// with chi(P^{d-1}) = d. This deliberately avoids the alternating-sum
// formula used by the engine.

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "alexpoly/filtration.hpp"

namespace alexpoly_test {

inline int mobius_fiber_euler(const alexpoly::filtration_engine& e,
                              const alexpoly::value_vec& v) {
    const int r = e.r();
    const int c = e.dim_c(v);
    if (c == 0) return 0; // C(v) = 0, empty projectivization

    std::vector<int> d(1u << r);
    for (unsigned mask = 0; mask < (1u << r); ++mask)
        d[mask] = e.subspace_dim(mask, v);

    // A hyperplane containing all of C(v) empties the complement.
    for (int i = 0; i < r; ++i)
        if (d[1u << i] == c) return 0;

    // Flats: closures cl(S) = {i : d(S + i) = d(S)}, keyed by closed mask.
    std::map<unsigned, int> flat_dim; // closed mask -> dim of the subspace
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        unsigned closed = 0;
        for (int i = 0; i < r; ++i)
            if (d[mask | (1u << i)] == d[mask]) closed |= (1u << i);
        flat_dim[closed] = d[mask];
    }

    // Moebius function from the bottom flat (the whole space, closed mask 0)
    // upward: mu(X) = -sum of mu over flats strictly below X.
    std::vector<std::pair<unsigned, int>> flats(flat_dim.begin(), flat_dim.end());
    std::sort(flats.begin(), flats.end(), [](const auto& a, const auto& b) {
        const int pa = __builtin_popcount(a.first), pb = __builtin_popcount(b.first);
        return pa != pb ? pa < pb : a.first < b.first;
    });
    std::map<unsigned, long> mu;
    for (const auto& [mask, dim] : flats) {
        long m = (mask == 0) ? 1 : 0;
        if (mask != 0) {
            for (const auto& [sub, mu_sub] : mu)
                if (sub != mask && (sub & mask) == sub) m -= mu_sub;
        }
        mu[mask] = m;
    }

    long chi = 0;
    for (const auto& [mask, dim] : flat_dim) chi += mu[mask] * dim;
    return static_cast<int>(chi);
}

} // namespace alexpoly_test
