#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <ostream>
#include <string>

#include "alexpoly/errors.hpp"

namespace alexpoly {

// Exact rational scalar. Backed by GMP; always in canonical reduced form
// (gcd(|num|, den) = 1, den >= 1). All arithmetic is exact.
class rational {
  public:
    rational() : q_(0) {}
    rational(long n) : q_(static_cast<signed long>(n)) {}
    rational(int n) : q_(n) {}
    rational(long num, long den) {
        if (den == 0) throw error(errc::zero_denominator, "rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    static rational from_decimal_string(const std::string& s); // integers and p/q only

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_one() const { return q_ == 1; }
    bool is_integer() const { return q_.get_den() == 1; }
    int sign() const { return sgn(q_); }

    const mpz_class& num() const { return q_.get_num(); }
    const mpz_class& den() const { return q_.get_den(); }

    rational operator-() const {
        rational r;
        r.q_ = -q_;
        return r;
    }
    rational& operator+=(const rational& o) { q_ += o.q_; return *this; }
    rational& operator-=(const rational& o) { q_ -= o.q_; return *this; }
    rational& operator*=(const rational& o) { q_ *= o.q_; return *this; }
    rational& operator/=(const rational& o) {
        if (o.is_zero()) throw error(errc::zero_denominator, "division of rationals by zero");
        q_ /= o.q_;
        return *this;
    }

    friend rational operator+(rational a, const rational& b) { return a += b; }
    friend rational operator-(rational a, const rational& b) { return a -= b; }
    friend rational operator*(rational a, const rational& b) { return a *= b; }
    friend rational operator/(rational a, const rational& b) { return a /= b; }

    friend bool operator==(const rational& a, const rational& b) { return a.q_ == b.q_; }
    friend bool operator!=(const rational& a, const rational& b) { return a.q_ != b.q_; }
    friend bool operator<(const rational& a, const rational& b) { return a.q_ < b.q_; }

    // "3", "-7", "2/5". No whitespace, no decimals.
    std::string str() const {
        if (is_integer()) return q_.get_num().get_str();
        return q_.get_num().get_str() + "/" + q_.get_den().get_str();
    }

    friend std::ostream& operator<<(std::ostream& os, const rational& r) { return os << r.str(); }

    const mpq_class& raw() const { return q_; }

  private:
    mpq_class q_;
};

inline rational rational::from_decimal_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) {
            mpq_class q(mpz_class(s), 1);
            return rational(q);
        }
        mpz_class num(s.substr(0, slash));
        mpz_class den(s.substr(slash + 1));
        if (den == 0) throw error(errc::zero_denominator, "zero denominator in '" + s + "'");
        mpq_class q(num, den);
        q.canonicalize();
        return rational(q);
    } catch (const std::invalid_argument&) {
        throw error(errc::syntax_error, "malformed rational '" + s + "'");
    }
}

} // namespace alexpoly
