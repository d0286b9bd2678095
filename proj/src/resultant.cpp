#include "alexpoly/resultant.hpp"

#include <utility>

#include "alexpoly/errors.hpp"

namespace alexpoly {

bivar_poly bareiss_determinant(std::vector<std::vector<bivar_poly>> m) {
    const size_t n = m.size();
    if (n == 0) return bivar_poly::constant(rational(1));
    for (const auto& row : m)
        if (row.size() != n) throw error(errc::internal, "bareiss_determinant: matrix not square");

    int sign = 1;
    bivar_poly prev = bivar_poly::constant(rational(1));
    for (size_t k = 0; k + 1 < n; ++k) {
        size_t piv = k;
        while (piv < n && m[piv][k].is_zero()) ++piv;
        if (piv == n) return bivar_poly(); // zero column, det = 0
        if (piv != k) {
            std::swap(m[piv], m[k]);
            sign = -sign;
        }
        for (size_t i = k + 1; i < n; ++i) {
            for (size_t j = k + 1; j < n; ++j)
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]).exact_div(prev);
            m[i][k] = bivar_poly();
        }
        prev = m[k][k];
    }
    bivar_poly det = m[n - 1][n - 1];
    return sign < 0 ? -det : det;
}

namespace {

void strip_leading_zeros(std::vector<bivar_poly>& a) {
    while (!a.empty() && a.back().is_zero()) a.pop_back();
}

} // namespace

bivar_poly sylvester_resultant(std::vector<bivar_poly> a, std::vector<bivar_poly> b) {
    strip_leading_zeros(a);
    strip_leading_zeros(b);
    if (a.empty() || b.empty()) return bivar_poly(); // Res(0, -) = 0
    const size_t n = a.size() - 1;
    const size_t m = b.size() - 1;
    if (n == 0 && m == 0) return bivar_poly::constant(rational(1));
    if (n == 0) {
        // Res(c, g) = c^deg(g)
        bivar_poly res = bivar_poly::constant(rational(1));
        for (size_t i = 0; i < m; ++i) res = res * a[0];
        return res;
    }
    if (m == 0) {
        bivar_poly res = bivar_poly::constant(rational(1));
        for (size_t i = 0; i < n; ++i) res = res * b[0];
        return res;
    }

    const size_t dim = n + m;
    std::vector<std::vector<bivar_poly>> s(dim, std::vector<bivar_poly>(dim));
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j <= n; ++j) s[i][i + j] = a[n - j];
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j <= m; ++j) s[m + i][i + j] = b[m - j];
    return bareiss_determinant(std::move(s));
}

namespace {

// Coefficient vectors of f by powers of x (entries are polynomials in y).
std::vector<bivar_poly> coeffs_by_x(const bivar_poly& f) {
    std::vector<bivar_poly> out(static_cast<size_t>(f.degree_x() + 1));
    for (size_t k = 0; k < out.size(); ++k) out[k] = f.coeff_of_x_power(static_cast<int>(k));
    return out;
}

} // namespace

bool is_squarefree(const bivar_poly& f) {
    if (f.is_zero() || f.is_constant())
        throw error(errc::internal, "is_squarefree: needs a nonconstant polynomial");
    if (f.degree_x() >= 1) {
        const bivar_poly fx = f.derivative_x();
        const bivar_poly disc = sylvester_resultant(coeffs_by_x(f), coeffs_by_x(fx));
        return !disc.is_zero();
    }
    // f is a polynomial in y alone; test on the swapped variables.
    const bivar_poly g = f.swap_vars();
    const bivar_poly gx = g.derivative_x();
    const bivar_poly disc = sylvester_resultant(coeffs_by_x(g), coeffs_by_x(gx));
    return !disc.is_zero();
}

} // namespace alexpoly
