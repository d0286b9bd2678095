#include "alexpoly/semigroup.hpp"

#include <algorithm>

#include "alexpoly/echelon.hpp"
#include "alexpoly/errors.hpp"
#include "alexpoly/series.hpp"

namespace alexpoly {

namespace {

// Exact membership indicator of the value semigroup on [0, n): k is a value
// iff k is a pivot order of the row space spanned by the truncated images of
// all monomials x^a y^b. Monomials of total degree > floor((n-1)/m) have
// order >= n on the branch and cannot contribute.
std::vector<char> membership_window(const branch_param& b, int n) {
    const int m = b.multiplicity();
    const int deg_bound = (n - 1) / m;

    const trunc_series xs = trunc_series::from_poly(b.x, n);
    const trunc_series ys = trunc_series::from_poly(b.y, n);
    std::vector<trunc_series> xpow, ypow;
    xpow.reserve(static_cast<size_t>(deg_bound) + 1);
    ypow.reserve(static_cast<size_t>(deg_bound) + 1);
    trunc_series one(n);
    one.set_coeff(0, rational(1));
    xpow.push_back(one);
    ypow.push_back(one);
    for (int k = 1; k <= deg_bound; ++k) {
        xpow.push_back(series_mul(xpow.back(), xs));
        ypow.push_back(series_mul(ypow.back(), ys));
    }

    const int ox = b.x.order(), oy = b.y.order();
    q_echelon ech(n);
    for (int d = 0; d <= deg_bound; ++d) {
        for (int a = d; a >= 0; --a) {
            const int e = d - a;
            if (ox < 0 && a > 0) continue; // x == 0: monomial vanishes
            if (oy < 0 && e > 0) continue;
            const long ord = static_cast<long>(a) * (ox < 0 ? 0 : ox) +
                             static_cast<long>(e) * (oy < 0 ? 0 : oy);
            if (ord >= n) continue;
            const trunc_series img = series_mul(xpow[static_cast<size_t>(a)],
                                                ypow[static_cast<size_t>(e)]);
            std::vector<rational> row(static_cast<size_t>(n));
            for (int k = 0; k < n; ++k) row[static_cast<size_t>(k)] = img.coeff(k);
            ech.add(std::move(row));
        }
    }

    std::vector<char> mem(static_cast<size_t>(n), 0);
    for (int p : ech.pivots()) mem[static_cast<size_t>(p)] = 1;
    return mem;
}

long conductor_of(const std::vector<char>& mem) {
    long c = 0;
    for (size_t k = 0; k < mem.size(); ++k)
        if (!mem[k]) c = static_cast<long>(k) + 1;
    return c;
}

bool gap_set_symmetric(const std::vector<char>& mem, long c) {
    for (long k = 0; k < c; ++k)
        if ((mem[static_cast<size_t>(k)] != 0) == (mem[static_cast<size_t>(c - 1 - k)] != 0))
            return false;
    return true;
}

} // namespace

branch_semigroup branch_value_semigroup(const branch_param& b, long max_bound) {
    const int m = b.multiplicity();
    if (m < 1)
        throw error(errc::non_positive_order,
                    "branch must have a parametrization of positive order");

    long n = std::max<long>(16, 4L * m);
    for (; n <= max_bound; n *= 2) {
        std::vector<char> mem = membership_window(b, static_cast<int>(n));
        const long c = conductor_of(mem);
        // Certificate: with conductor + multiplicity inside the window, the
        // observed members generate the whole semigroup.
        if (c + m > n) continue;
        if (!gap_set_symmetric(mem, c)) continue;
        std::vector<char> mem2 = membership_window(b, static_cast<int>(2 * n));
        if (!std::equal(mem.begin(), mem.end(), mem2.begin())) continue;
        if (conductor_of(mem2) != c) continue;

        branch_semigroup out;
        out.membership = std::move(mem2);
        out.window = 2 * n;
        out.conductor = c;
        for (long k = 0; k < c; ++k)
            if (!out.membership[static_cast<size_t>(k)]) out.gaps.push_back(k);
        // Minimal generators: members not a sum of two nonzero members.
        // Any s >= c + 2m splits as (s - m) + m, so the search is finite.
        for (long s = 1; s < c + 2 * m && s < out.window; ++s) {
            if (!out.membership[static_cast<size_t>(s)]) continue;
            bool decomposable = false;
            for (long a = m; a + m <= s; ++a)
                if (out.membership[static_cast<size_t>(a)] &&
                    out.membership[static_cast<size_t>(s - a)]) {
                    decomposable = true;
                    break;
                }
            if (!decomposable) out.generators.push_back(s);
        }
        return out;
    }
    throw error(errc::certification_failed,
                "branch semigroup did not stabilize below bound " + std::to_string(max_bound));
}

} // namespace alexpoly
