#pragma once

#include <vector>

#include "alexpoly/branch.hpp"

namespace alexpoly {

// Numerical semigroup of values of a single branch: all finite orders
// ord_t g(x(t), y(t)) over germs g.
struct branch_semigroup {
    std::vector<long> generators; // minimal generating set
    long conductor = 0;           // least c with [c, inf) in the semigroup
    std::vector<long> gaps;       // complement in [0, conductor)
    std::vector<char> membership; // indicator on [0, window)
    long window = 0;

    bool contains(long v) const {
        if (v < 0) return false;
        if (v >= conductor) return true;
        return v < window && membership[static_cast<size_t>(v)] != 0;
    }
};

// Enumerates values by exact rank computations on truncated monomial images,
// growing the truncation bound until the window certifies the whole
// semigroup (conductor + multiplicity inside the window, stable under one
// doubling, gap set symmetric). Throws errc::certification_failed if the
// bound exceeds max_bound.
branch_semigroup branch_value_semigroup(const branch_param& b, long max_bound = 1L << 14);

} // namespace alexpoly
