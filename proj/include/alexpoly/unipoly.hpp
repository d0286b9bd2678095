#pragma once

#include <map>
#include <ostream>
#include <utility>

#include "alexpoly/rational.hpp"

namespace alexpoly {

// Univariate polynomial over the rationals, sparse. No zero coefficients are
// ever stored; querying an absent exponent yields 0.
class uni_poly {
  public:
    uni_poly() = default;

    static uni_poly monomial(int exp, rational c) {
        uni_poly p;
        p.set(exp, std::move(c));
        return p;
    }

    bool is_zero() const { return terms_.empty(); }

    rational coeff(int exp) const {
        auto it = terms_.find(exp);
        return it == terms_.end() ? rational() : it->second;
    }

    void set(int exp, rational c) {
        if (c.is_zero())
            terms_.erase(exp);
        else
            terms_[exp] = std::move(c);
    }

    void add_term(int exp, const rational& c) {
        auto it = terms_.find(exp);
        if (it == terms_.end()) {
            if (!c.is_zero()) terms_.emplace(exp, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    // Order of vanishing at t = 0; -1 encodes the zero polynomial.
    int order() const { return terms_.empty() ? -1 : terms_.begin()->first; }
    int degree() const { return terms_.empty() ? -1 : terms_.rbegin()->first; }

    uni_poly& operator+=(const uni_poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    uni_poly& operator-=(const uni_poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend uni_poly operator+(uni_poly a, const uni_poly& b) { return a += b; }
    friend uni_poly operator-(uni_poly a, const uni_poly& b) { return a -= b; }

    friend uni_poly operator*(const uni_poly& a, const uni_poly& b) {
        uni_poly p;
        for (const auto& [ea, ca] : a.terms_)
            for (const auto& [eb, cb] : b.terms_) p.add_term(ea + eb, ca * cb);
        return p;
    }

    friend bool operator==(const uni_poly& a, const uni_poly& b) { return a.terms_ == b.terms_; }

    const std::map<int, rational>& terms() const { return terms_; }

  private:
    std::map<int, rational> terms_;
};

} // namespace alexpoly
