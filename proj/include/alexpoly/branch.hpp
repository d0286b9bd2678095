#pragma once

#include <algorithm>
#include <string>

#include "alexpoly/unipoly.hpp"

namespace alexpoly {

// One branch of the curve, given by a polynomial parametrization
// t -> (x(t), y(t)) with x(0) = y(0) = 0.
struct branch_param {
    uni_poly x;
    uni_poly y;
    std::string name;

    // min(ord x, ord y), ignoring an identically-zero component.
    // Returns -1 if both components vanish.
    int multiplicity() const {
        const int ox = x.order(), oy = y.order();
        if (ox < 0) return oy;
        if (oy < 0) return ox;
        return std::min(ox, oy);
    }

    friend bool operator==(const branch_param& a, const branch_param& b) {
        return a.x == b.x && a.y == b.y && a.name == b.name;
    }
};

} // namespace alexpoly
