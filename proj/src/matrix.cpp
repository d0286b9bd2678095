#include "alexpoly/matrix.hpp"

#include <algorithm>

#include "alexpoly/errors.hpp"
#include "alexpoly/series.hpp"

namespace alexpoly {

monomial_matrix::monomial_matrix(const curve& c, value_vec box, long long max_cells)
    : box_(std::move(box)) {
    const int r = c.num_branches();
    trunc_orders_.resize(static_cast<size_t>(r));
    col_offset_.resize(static_cast<size_t>(r));
    degree_bound_ = 0;
    for (int i = 0; i < r; ++i) {
        const int bi = box_[static_cast<size_t>(i)];
        trunc_orders_[static_cast<size_t>(i)] = bi + 1;
        col_offset_[static_cast<size_t>(i)] = total_cols_;
        total_cols_ += bi + 1;
        degree_bound_ = std::max(degree_bound_, bi / c.branch(i).multiplicity);
    }

    const long long nrows =
        static_cast<long long>(degree_bound_ + 1) * (degree_bound_ + 2) / 2;
    if (nrows * total_cols_ > max_cells)
        throw error(errc::budget_exceeded,
                    "monomial matrix needs " + std::to_string(nrows * total_cols_) +
                        " cells, budget is " + std::to_string(max_cells));

    // Truncated powers of the parametrization components, per branch.
    std::vector<std::vector<trunc_series>> xpow(static_cast<size_t>(r)),
        ypow(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) {
        const int n = trunc_orders_[static_cast<size_t>(i)];
        trunc_series one(n);
        one.set_coeff(0, rational(1));
        auto& xp = xpow[static_cast<size_t>(i)];
        auto& yp = ypow[static_cast<size_t>(i)];
        xp.push_back(one);
        yp.push_back(one);
        const trunc_series xs = trunc_series::from_poly(c.branch(i).param.x, n);
        const trunc_series ys = trunc_series::from_poly(c.branch(i).param.y, n);
        for (int k = 1; k <= degree_bound_; ++k) {
            xp.push_back(series_mul(xp.back(), xs));
            yp.push_back(series_mul(yp.back(), ys));
        }
    }

    for (int d = 0; d <= degree_bound_; ++d)
        for (int a = d; a >= 0; --a) monomials_.emplace_back(a, d - a);

    rows_.reserve(monomials_.size());
    for (const auto& [a, b] : monomials_) {
        std::vector<rational> row(static_cast<size_t>(total_cols_));
        for (int i = 0; i < r; ++i) {
            const int n = trunc_orders_[static_cast<size_t>(i)];
            const trunc_series img = series_mul(xpow[static_cast<size_t>(i)][static_cast<size_t>(a)],
                                                ypow[static_cast<size_t>(i)][static_cast<size_t>(b)]);
            for (int k = 0; k < n; ++k)
                row[static_cast<size_t>(col_index(i, k))] = img.coeff(k);
        }
        rows_.push_back(std::move(row));
    }
}

int monomial_matrix::rank_of_submatrix(const value_vec& v) const {
    const int r = num_branches();
    std::vector<int> cols;
    for (int i = 0; i < r; ++i) {
        const int vi = std::min(v[static_cast<size_t>(i)],
                                trunc_orders_[static_cast<size_t>(i)]);
        for (int k = 0; k < vi; ++k) cols.push_back(col_index(i, k));
    }
    if (cols.empty()) return 0;

    // Integer matrix: each row scaled by the lcm of its denominators.
    const size_t nr = rows_.size(), nc = cols.size();
    std::vector<std::vector<mpz_class>> a(nr, std::vector<mpz_class>(nc));
    for (size_t i = 0; i < nr; ++i) {
        mpz_class lcm = 1;
        for (size_t j = 0; j < nc; ++j) {
            const rational& q = rows_[i][static_cast<size_t>(cols[j])];
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.den().get_mpz_t());
        }
        for (size_t j = 0; j < nc; ++j) {
            const rational& q = rows_[i][static_cast<size_t>(cols[j])];
            a[i][j] = q.num() * (lcm / q.den());
        }
    }

    size_t k = 0;
    mpz_class prev = 1;
    while (k < nr && k < nc) {
        size_t pi = nr, pj = nc;
        for (size_t j = k; j < nc && pi == nr; ++j)
            for (size_t i = k; i < nr; ++i)
                if (a[i][j] != 0) {
                    pi = i;
                    pj = j;
                    break;
                }
        if (pi == nr) break;
        if (pi != k) std::swap(a[pi], a[k]);
        if (pj != k)
            for (size_t i = 0; i < nr; ++i) std::swap(a[i][pj], a[i][k]);
        for (size_t i = k + 1; i < nr; ++i) {
            for (size_t j = k + 1; j < nc; ++j) {
                mpz_class t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
                mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
                a[i][j] = t;
            }
            a[i][k] = 0;
        }
        prev = a[k][k];
        ++k;
    }
    return static_cast<int>(k);
}

} // namespace alexpoly
