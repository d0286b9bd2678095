#pragma once

#include <algorithm>
#include <cassert>
#include <optional>
#include <vector>

#include "alexpoly/rational.hpp"
#include "alexpoly/unipoly.hpp"

namespace alexpoly {

// Leading term of a truncated series: order and (nonzero) coefficient.
// std::nullopt means "zero up to the truncation order", i.e. order >= N,
// which is weaker than "identically zero".
struct lead_term {
    int order;
    rational coeff;

    friend bool operator==(const lead_term& a, const lead_term& b) {
        return a.order == b.order && a.coeff == b.coeff;
    }
};

// Power series in t truncated at order N: coefficients of t^0 .. t^(N-1) are
// exact, everything at or beyond N is unknown and never read. N shrinks to
// the minimum of the operands' orders under arithmetic.
class trunc_series {
  public:
    explicit trunc_series(int trunc_order) : coeffs_(static_cast<size_t>(trunc_order)) {
        assert(trunc_order >= 1);
    }

    static trunc_series from_poly(const uni_poly& p, int trunc_order) {
        trunc_series s(trunc_order);
        for (const auto& [e, c] : p.terms())
            if (e < trunc_order) s.coeffs_[static_cast<size_t>(e)] = c;
        return s;
    }

    int trunc_order() const { return static_cast<int>(coeffs_.size()); }

    const rational& coeff(int k) const {
        assert(k >= 0 && k < trunc_order() && "read beyond truncation order");
        return coeffs_[static_cast<size_t>(k)];
    }

    void set_coeff(int k, rational c) {
        assert(k >= 0 && k < trunc_order());
        coeffs_[static_cast<size_t>(k)] = std::move(c);
    }

    bool is_zero_up_to_n() const {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const rational& c) { return c.is_zero(); });
    }

    friend trunc_series operator+(const trunc_series& a, const trunc_series& b) {
        trunc_series r(std::min(a.trunc_order(), b.trunc_order()));
        for (int k = 0; k < r.trunc_order(); ++k) r.coeffs_[k] = a.coeff(k) + b.coeff(k);
        return r;
    }

    friend trunc_series operator-(const trunc_series& a, const trunc_series& b) {
        trunc_series r(std::min(a.trunc_order(), b.trunc_order()));
        for (int k = 0; k < r.trunc_order(); ++k) r.coeffs_[k] = a.coeff(k) - b.coeff(k);
        return r;
    }

    friend bool operator==(const trunc_series& a, const trunc_series& b) {
        return a.coeffs_ == b.coeffs_;
    }

  private:
    std::vector<rational> coeffs_;
};

// Cauchy product truncated at min(N_a, N_b).
inline trunc_series series_mul(const trunc_series& a, const trunc_series& b) {
    const int n = std::min(a.trunc_order(), b.trunc_order());
    trunc_series r(n);
    for (int i = 0; i < std::min(a.trunc_order(), n); ++i) {
        if (a.coeff(i).is_zero()) continue;
        for (int j = 0; j < n - i && j < b.trunc_order(); ++j) {
            if (b.coeff(j).is_zero()) continue;
            r.set_coeff(i + j, r.coeff(i + j) + a.coeff(i) * b.coeff(j));
        }
    }
    return r;
}

inline trunc_series series_scale(const trunc_series& a, const rational& c) {
    trunc_series r(a.trunc_order());
    if (c.is_zero()) return r;
    for (int k = 0; k < a.trunc_order(); ++k)
        if (!a.coeff(k).is_zero()) r.set_coeff(k, a.coeff(k) * c);
    return r;
}

// Smallest retained exponent with nonzero coefficient, or nullopt if the
// series vanishes up to its truncation order.
inline std::optional<lead_term> lead(const trunc_series& s) {
    for (int k = 0; k < s.trunc_order(); ++k)
        if (!s.coeff(k).is_zero()) return lead_term{k, s.coeff(k)};
    return std::nullopt;
}

} // namespace alexpoly
