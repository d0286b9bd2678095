#include "alexpoly/bivar.hpp"

#include <sstream>

#include "alexpoly/errors.hpp"

namespace alexpoly {

int bivar_poly::degree_x() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        if (e.ex > d) d = e.ex;
    return d;
}

int bivar_poly::degree_y() const {
    int d = -1;
    for (const auto& [e, c] : terms_)
        if (e.ey > d) d = e.ey;
    return d;
}

bivar_poly& bivar_poly::operator+=(const bivar_poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.ex, e.ey, c);
    return *this;
}

bivar_poly& bivar_poly::operator-=(const bivar_poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e.ex, e.ey, -c);
    return *this;
}

bivar_poly operator*(const bivar_poly& a, const bivar_poly& b) {
    bivar_poly p;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) p.add_term(ea.ex + eb.ex, ea.ey + eb.ey, ca * cb);
    return p;
}

bivar_poly operator-(const bivar_poly& a) {
    bivar_poly p;
    for (const auto& [e, c] : a.terms_) p.terms_.emplace(e, -c);
    return p;
}

bivar_poly bivar_poly::derivative_x() const {
    bivar_poly p;
    for (const auto& [e, c] : terms_)
        if (e.ex > 0) p.add_term(e.ex - 1, e.ey, c * rational(e.ex));
    return p;
}

bivar_poly bivar_poly::derivative_y() const {
    bivar_poly p;
    for (const auto& [e, c] : terms_)
        if (e.ey > 0) p.add_term(e.ex, e.ey - 1, c * rational(e.ey));
    return p;
}

bivar_poly bivar_poly::exact_div(const bivar_poly& d) const {
    if (d.is_zero()) throw error(errc::internal, "exact_div by zero polynomial");
    bivar_poly rem = *this;
    bivar_poly quot;
    const auto& dlead = *d.terms_.rbegin(); // graded-lex leading term
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms_.rbegin();
        const int ex = rlead.first.ex - dlead.first.ex;
        const int ey = rlead.first.ey - dlead.first.ey;
        if (ex < 0 || ey < 0)
            throw error(errc::internal, "exact_div: division not exact");
        bivar_poly t = monomial(ex, ey, rlead.second / dlead.second);
        quot += t;
        rem -= t * d;
    }
    return quot;
}

bivar_poly bivar_poly::normalized_primitive() const {
    if (is_zero()) return *this;
    // content = gcd of numerators / lcm of denominators
    mpz_class num_gcd = 0, den_lcm = 1;
    for (const auto& [e, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.den().get_mpz_t());
    }
    mpq_class content(num_gcd, den_lcm);
    content.canonicalize();
    rational scale = rational(content);
    if (terms_.rbegin()->second.sign() < 0) scale = -scale;
    bivar_poly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, c / scale);
    return p;
}

bivar_poly bivar_poly::coeff_of_x_power(int k) const {
    bivar_poly p;
    for (const auto& [e, c] : terms_)
        if (e.ex == k) p.add_term(0, e.ey, c);
    return p;
}

bivar_poly bivar_poly::coeff_of_y_power(int k) const {
    bivar_poly p;
    for (const auto& [e, c] : terms_)
        if (e.ey == k) p.add_term(e.ex, 0, c);
    return p;
}

bivar_poly bivar_poly::swap_vars() const {
    bivar_poly p;
    for (const auto& [e, c] : terms_) p.terms_.emplace(xy_exp{e.ey, e.ex}, c);
    return p;
}

std::string bivar_poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            if (a.sign() < 0) a = -a;
        }
        first = false;
        const bool has_var = e.ex > 0 || e.ey > 0;
        if (!has_var || !a.is_one()) {
            os << a.str();
            if (has_var) os << "*";
        }
        if (e.ex > 0) {
            os << "x";
            if (e.ex > 1) os << "^" << e.ex;
            if (e.ey > 0) os << "*";
        }
        if (e.ey > 0) {
            os << "y";
            if (e.ey > 1) os << "^" << e.ey;
        }
    }
    return os.str();
}

trunc_series eval_on_branch(const bivar_poly& g, const branch_param& b, int trunc_order) {
    // Horner over y, then over x: g = sum_k y^k g_k(x).
    const trunc_series xs = trunc_series::from_poly(b.x, trunc_order);
    const trunc_series ys = trunc_series::from_poly(b.y, trunc_order);
    const int dy = g.degree_y();
    trunc_series acc(trunc_order);
    for (int k = dy; k >= 0; --k) {
        acc = series_mul(acc, ys);
        const bivar_poly gk = g.coeff_of_y_power(k); // polynomial in x
        const int dx = gk.degree_x();
        trunc_series row(trunc_order);
        for (int j = dx; j >= 0; --j) {
            row = series_mul(row, xs);
            const rational cj = gk.coeff(j, 0);
            if (!cj.is_zero()) row.set_coeff(0, row.coeff(0) + cj);
        }
        acc = acc + row;
    }
    return acc;
}

uni_poly eval_on_branch_exact(const bivar_poly& g, const branch_param& b) {
    const int dy = g.degree_y();
    uni_poly acc;
    for (int k = dy; k >= 0; --k) {
        acc = acc * b.y;
        const bivar_poly gk = g.coeff_of_y_power(k);
        const int dx = gk.degree_x();
        uni_poly row;
        for (int j = dx; j >= 0; --j) {
            row = row * b.x;
            const rational cj = gk.coeff(j, 0);
            if (!cj.is_zero()) row.add_term(0, cj);
        }
        acc += row;
    }
    return acc;
}

} // namespace alexpoly
