#include "alexpoly/laurent.hpp"

#include <algorithm>
#include <sstream>

#include "alexpoly/errors.hpp"

namespace alexpoly {

laurent_poly laurent_poly::tprod_minus_one(int nvars) {
    laurent_poly p(nvars);
    p.add_term(value_vec(static_cast<size_t>(nvars), 1), 1);
    p.add_term(value_vec(static_cast<size_t>(nvars), 0), -1);
    return p;
}

void laurent_poly::add_term(const value_vec& e, long long c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

void laurent_poly::set_term(const value_vec& e, long long c) {
    if (c == 0)
        terms_.erase(e);
    else
        terms_[e] = c;
}

bool laurent_poly::has_negative_exponent() const {
    for (const auto& [e, c] : terms_)
        for (int x : e)
            if (x < 0) return true;
    return false;
}

value_vec laurent_poly::max_exponents() const {
    value_vec m(static_cast<size_t>(nvars_), 0);
    for (const auto& [e, c] : terms_)
        for (size_t i = 0; i < m.size(); ++i) m[i] = std::max(m[i], e[i]);
    return m;
}

laurent_poly& laurent_poly::operator+=(const laurent_poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
}

laurent_poly& laurent_poly::operator-=(const laurent_poly& o) {
    for (const auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
}

laurent_poly operator*(const laurent_poly& a, const laurent_poly& b) {
    laurent_poly p(a.nvars_);
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) p.add_term(vec_add(ea, eb), ca * cb);
    return p;
}

laurent_poly operator-(const laurent_poly& a) {
    laurent_poly p(a.nvars_);
    for (const auto& [e, c] : a.terms_) p.terms_.emplace(e, -c);
    return p;
}

box_series::box_series(value_vec lo, value_vec hi) : lo_(std::move(lo)), hi_(std::move(hi)) {
    strides_.resize(lo_.size());
    size_t total = 1;
    for (size_t i = lo_.size(); i-- > 0;) {
        strides_[i] = total;
        total *= static_cast<size_t>(hi_[i] - lo_[i] + 1);
    }
    data_.assign(total, 0);
}

size_t box_series::index(const value_vec& v) const {
    size_t idx = 0;
    for (size_t i = 0; i < lo_.size(); ++i) {
        if (v[i] < lo_[i] || v[i] > hi_[i])
            throw error(errc::window_exceeded,
                        "series window read at " + vec_str(v) + " outside [" + vec_str(lo_) +
                            ", " + vec_str(hi_) + "]");
        idx += static_cast<size_t>(v[i] - lo_[i]) * strides_[i];
    }
    return idx;
}

long long box_series::at(const value_vec& v) const { return data_[index(v)]; }

long long box_series::at_clamped_low(value_vec v) const {
    for (size_t i = 0; i < v.size(); ++i) v[i] = std::max(v[i], lo_[i]);
    return data_[index(v)];
}

void box_series::set(const value_vec& v, long long c) { data_[index(v)] = c; }

laurent_poly difference_transform(const box_series& c_table, const value_vec& stable_from) {
    const int r = c_table.nvars();
    laurent_poly p(r);
    value_vec w = c_table.lo();
    do {
        // coefficient of prod (t_i - 1) * L at w
        long long coeff = 0;
        for (unsigned mask = 0; mask < (1u << r); ++mask) {
            value_vec arg = add_subset_ones(w, mask);
            for (int& x : arg) --x; // w - 1 + 1_S
            const int bits = __builtin_popcount(mask);
            const long long c = c_table.at_clamped_low(arg);
            coeff += (bits % 2 == 0) ? c : -c;
        }
        if (coeff != 0) {
            bool clamp_layer = false, margin = false;
            for (int i = 0; i < r; ++i) {
                if (w[static_cast<size_t>(i)] < 0) clamp_layer = true;
                if (w[static_cast<size_t>(i)] > stable_from[static_cast<size_t>(i)]) margin = true;
            }
            if (clamp_layer)
                throw error(errc::not_stabilized,
                            "difference transform nonzero at clamp layer " + vec_str(w));
            if (margin)
                throw error(errc::not_stabilized,
                            "difference transform nonzero on box margin at " + vec_str(w) +
                                "; box too small (raise --margin) or upstream defect");
            p.set_term(w, coeff);
        }
    } while (next_in_box(w, c_table.lo(), c_table.hi()));
    return p;
}

laurent_poly divide_exact_by_tprod_minus_one(const laurent_poly& pprime) {
    const int r = pprime.nvars();
    if (r < 2)
        throw error(errc::internal, "division by t1...tr - 1 applies to r >= 2 only");
    laurent_poly q(r);
    if (!pprime.is_zero()) {
        const value_vec top = pprime.max_exponents();
        const value_vec zero(static_cast<size_t>(r), 0);
        // p(w) = p(w - 1) - p'(w), with p = 0 outside the positive orthant;
        // graded-lex order makes w - 1 available before w.
        for (const value_vec& w : graded_lex_points(zero, top)) {
            long long prev = 0;
            bool interior = true;
            for (int x : w)
                if (x == 0) interior = false;
            if (interior) {
                value_vec wm = w;
                for (int& x : wm) --x;
                prev = q.coeff(wm);
            }
            q.set_term(w, prev - pprime.coeff(w));
        }
    }
    const laurent_poly check = q * laurent_poly::tprod_minus_one(r);
    if (!(check == pprime)) {
        const laurent_poly rem = pprime - check;
        throw error(errc::not_divisible,
                    "P' is not divisible by t1*...*tr - 1; remainder " + canonical_render(rem));
    }
    return q;
}

std::vector<long long> specialize_diagonal(const box_series& s, int order) {
    for (int h : s.hi())
        if (order > h)
            throw error(errc::window_exceeded,
                        "diagonal order " + std::to_string(order) +
                            " exceeds the window bound " + vec_str(s.hi()));
    std::vector<long long> out(static_cast<size_t>(order) + 1, 0);
    value_vec lo(static_cast<size_t>(s.nvars()), 0);
    value_vec v = lo;
    do {
        const long g = vec_sum(v);
        if (g <= order) out[static_cast<size_t>(g)] += s.at(v);
    } while (next_in_box(v, lo, s.hi()));
    return out;
}

laurent_poly specialize_diagonal(const laurent_poly& p) {
    laurent_poly q(1);
    for (const auto& [e, c] : p.terms()) q.add_term(value_vec{static_cast<int>(vec_sum(e))}, c);
    return q;
}

namespace {

void render_monomial(std::ostream& os, const value_vec& e, int nvars, long long abs_coeff) {
    bool any_var = false;
    for (int x : e) any_var |= (x != 0);
    if (!any_var || abs_coeff != 1) {
        os << abs_coeff;
        if (any_var) os << "*";
    }
    bool first = true;
    for (int i = 0; i < nvars; ++i) {
        const int x = e[static_cast<size_t>(i)];
        if (x == 0) continue;
        if (!first) os << "*";
        first = false;
        if (nvars == 1)
            os << "t";
        else
            os << "t" << (i + 1);
        if (x != 1) os << "^" << x;
    }
}

} // namespace

std::string canonical_render(const laurent_poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [e, c] : p.terms()) {
        long long a = c;
        if (first) {
            if (a < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a < 0 ? " - " : " + ");
            if (a < 0) a = -a;
        }
        first = false;
        render_monomial(os, e, p.nvars(), a);
    }
    return os.str();
}

std::string render_series_window(const std::vector<long long>& coeffs) {
    laurent_poly p(1);
    for (size_t i = 0; i < coeffs.size(); ++i)
        p.add_term(value_vec{static_cast<int>(i)}, coeffs[i]);
    return canonical_render(p);
}

} // namespace alexpoly
