#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "alexpoly/box.hpp"

namespace alexpoly {

// Sparse Laurent polynomial with integer coefficients. No zero terms stored;
// iteration order is graded-lex.
class laurent_poly {
  public:
    explicit laurent_poly(int nvars = 1) : nvars_(nvars) {}

    static laurent_poly constant(int nvars, long long c) {
        laurent_poly p(nvars);
        p.add_term(value_vec(static_cast<size_t>(nvars), 0), c);
        return p;
    }
    // t_1 * ... * t_r - 1
    static laurent_poly tprod_minus_one(int nvars);

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    size_t term_count() const { return terms_.size(); }

    long long coeff(const value_vec& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? 0 : it->second;
    }
    long long constant_term() const { return coeff(value_vec(static_cast<size_t>(nvars_), 0)); }

    void add_term(const value_vec& e, long long c);
    void set_term(const value_vec& e, long long c);

    bool has_negative_exponent() const;
    value_vec max_exponents() const; // componentwise; zeros if empty

    laurent_poly& operator+=(const laurent_poly& o);
    laurent_poly& operator-=(const laurent_poly& o);
    friend laurent_poly operator+(laurent_poly a, const laurent_poly& b) { return a += b; }
    friend laurent_poly operator-(laurent_poly a, const laurent_poly& b) { return a -= b; }
    friend laurent_poly operator*(const laurent_poly& a, const laurent_poly& b);
    friend laurent_poly operator-(const laurent_poly& a);
    friend bool operator==(const laurent_poly& a, const laurent_poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    const std::map<value_vec, long long, graded_lex_less>& terms() const { return terms_; }

  private:
    int nvars_;
    std::map<value_vec, long long, graded_lex_less> terms_;
};

// Finite window [lo, hi] of an integer Laurent series, dense.
class box_series {
  public:
    box_series(value_vec lo, value_vec hi);

    int nvars() const { return static_cast<int>(lo_.size()); }
    const value_vec& lo() const { return lo_; }
    const value_vec& hi() const { return hi_; }

    long long at(const value_vec& v) const;         // throws WindowExceeded outside
    long long at_clamped_low(value_vec v) const;    // clamps components up to lo
    void set(const value_vec& v, long long c);

  private:
    size_t index(const value_vec& v) const;

    value_vec lo_, hi_;
    std::vector<size_t> strides_;
    std::vector<long long> data_;
};

// Coefficients of prod_i (t_i - 1) * L for the series L given on the window
// [-1, B] with clamp semantics below -1. Requires the transform to vanish on
// the clamp-adjacent layer (any coordinate = -1) and on the margin band (any
// coordinate beyond stable_from); otherwise throws NotStabilized. The result
// is supported in [0, stable_from].
laurent_poly difference_transform(const box_series& c_table, const value_vec& stable_from);

// Exact quotient P' / (t_1...t_r - 1) for r >= 2, computed by the telescoping
// recursion p(v) = p(v - 1) - p'(v) over graded-lex order and certified by
// re-multiplication; throws NotDivisible (with the remainder in the message)
// if the product does not reproduce the input.
laurent_poly divide_exact_by_tprod_minus_one(const laurent_poly& pprime);

// Substitute t_i := t. For a box series, coefficient i sums the window over
// |v| = i, valid for i <= min(hi); larger orders throw WindowExceeded.
std::vector<long long> specialize_diagonal(const box_series& s, int order);
laurent_poly specialize_diagonal(const laurent_poly& p);

// Deterministic text form: graded-lex ascending, explicit signs, "t" for one
// variable and "t1".."tr" otherwise, e.g. "1 - t + t^2", "-1 + t1*t2".
std::string canonical_render(const laurent_poly& p);

// "1 + t^2 + t^3" for a dense coefficient window starting at t^0.
std::string render_series_window(const std::vector<long long>& coeffs);

} // namespace alexpoly
