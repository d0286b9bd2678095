#pragma once

#include <map>
#include <string>
#include <utility>

#include "alexpoly/branch.hpp"
#include "alexpoly/rational.hpp"
#include "alexpoly/series.hpp"
#include "alexpoly/unipoly.hpp"

namespace alexpoly {

// (exponent_x, exponent_y), compared by total degree, then x-exponent.
struct xy_exp {
    int ex = 0;
    int ey = 0;

    friend bool operator==(const xy_exp& a, const xy_exp& b) { return a.ex == b.ex && a.ey == b.ey; }
    friend bool operator<(const xy_exp& a, const xy_exp& b) {
        const int da = a.ex + a.ey, db = b.ex + b.ey;
        if (da != db) return da < db;
        if (a.ex != b.ex) return a.ex < b.ex;
        return a.ey < b.ey;
    }
};

// Polynomial in x, y over the rationals, sparse, no stored zeros.
class bivar_poly {
  public:
    bivar_poly() = default;

    static bivar_poly constant(rational c) { return monomial(0, 0, std::move(c)); }
    static bivar_poly monomial(int ex, int ey, rational c) {
        bivar_poly p;
        p.add_term(ex, ey, c);
        return p;
    }
    static bivar_poly var_x() { return monomial(1, 0, rational(1)); }
    static bivar_poly var_y() { return monomial(0, 1, rational(1)); }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == xy_exp{0, 0});
    }

    int degree_x() const;
    int degree_y() const;
    int total_degree() const { return terms_.empty() ? -1 : (terms_.rbegin()->first.ex + terms_.rbegin()->first.ey); }

    rational coeff(int ex, int ey) const {
        auto it = terms_.find(xy_exp{ex, ey});
        return it == terms_.end() ? rational() : it->second;
    }

    void add_term(int ex, int ey, const rational& c) {
        if (c.is_zero()) return;
        xy_exp k{ex, ey};
        auto it = terms_.find(k);
        if (it == terms_.end()) {
            terms_.emplace(k, c);
            return;
        }
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }

    bivar_poly& operator+=(const bivar_poly& o);
    bivar_poly& operator-=(const bivar_poly& o);
    friend bivar_poly operator+(bivar_poly a, const bivar_poly& b) { return a += b; }
    friend bivar_poly operator-(bivar_poly a, const bivar_poly& b) { return a -= b; }
    friend bivar_poly operator*(const bivar_poly& a, const bivar_poly& b);
    friend bivar_poly operator-(const bivar_poly& a);

    friend bool operator==(const bivar_poly& a, const bivar_poly& b) { return a.terms_ == b.terms_; }

    bivar_poly derivative_x() const;
    bivar_poly derivative_y() const;

    // Exact quotient this / d. Throws errc::internal if the division leaves a
    // remainder; callers only use it where exactness is guaranteed.
    bivar_poly exact_div(const bivar_poly& d) const;

    // Divides by the content and makes the graded-lex leading coefficient
    // positive: the canonical representative of the line Q* . p.
    bivar_poly normalized_primitive() const;

    // Coefficient of x^k, as a polynomial in y alone.
    bivar_poly coeff_of_x_power(int k) const;
    // Coefficient of y^k, as a polynomial in x alone.
    bivar_poly coeff_of_y_power(int k) const;
    // Swap the roles of x and y.
    bivar_poly swap_vars() const;

    const std::map<xy_exp, rational>& terms() const { return terms_; }

    std::string str() const; // "y^2 - x^3" style, graded-lex ascending

  private:
    std::map<xy_exp, rational> terms_;
};

// g(x(t), y(t)) truncated at order N, exact in all retained coefficients.
trunc_series eval_on_branch(const bivar_poly& g, const branch_param& b, int trunc_order);

// g(x(t), y(t)) as an exact polynomial in t (no truncation); total zero test.
uni_poly eval_on_branch_exact(const bivar_poly& g, const branch_param& b);

} // namespace alexpoly
