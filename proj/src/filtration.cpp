#include "alexpoly/filtration.hpp"

#include <algorithm>
#include <thread>

#include "alexpoly/echelon.hpp"
#include "alexpoly/errors.hpp"

namespace alexpoly {

namespace {

// Reduced echelon basis of the row space of m, as explicit vectors. Row
// operations do not change the rank of any column subset, so everything
// downstream works in dimension <= rank instead of the monomial count.
std::vector<std::vector<rational>> reduced_row_basis(const monomial_matrix& m) {
    std::vector<std::vector<rational>> rows;
    std::vector<int> pivots;
    const int len = m.num_cols();
    for (int i = 0; i < m.num_rows(); ++i) {
        std::vector<rational> v = m.row(i);
        for (size_t k = 0; k < rows.size(); ++k) {
            const rational c = v[static_cast<size_t>(pivots[k])];
            if (c.is_zero()) continue;
            for (size_t j = static_cast<size_t>(pivots[k]); j < v.size(); ++j)
                if (!rows[k][j].is_zero()) v[j] -= c * rows[k][j];
        }
        int piv = -1;
        for (int j = 0; j < len; ++j)
            if (!v[static_cast<size_t>(j)].is_zero()) {
                piv = j;
                break;
            }
        if (piv < 0) continue;
        const rational inv = rational(1) / v[static_cast<size_t>(piv)];
        for (size_t j = static_cast<size_t>(piv); j < v.size(); ++j)
            if (!v[j].is_zero()) v[j] *= inv;
        for (size_t k = 0; k < rows.size(); ++k) {
            const rational c = rows[k][static_cast<size_t>(piv)];
            if (c.is_zero()) continue;
            for (size_t j = static_cast<size_t>(piv); j < v.size(); ++j)
                if (!v[j].is_zero()) rows[k][j] -= c * v[j];
        }
        size_t pos = 0;
        while (pos < pivots.size() && pivots[pos] < piv) ++pos;
        rows.insert(rows.begin() + static_cast<long>(pos), std::move(v));
        pivots.insert(pivots.begin() + static_cast<long>(pos), piv);
    }
    return rows;
}

} // namespace

filtration_engine::filtration_engine(const curve& c, const engine_options& opt)
    : r_(c.num_branches()), delta_(c.conductor_vector()) {
    box_.resize(static_cast<size_t>(r_));
    long long volume = 1;
    for (int i = 0; i < r_; ++i) {
        box_[static_cast<size_t>(i)] =
            std::max(delta_[static_cast<size_t>(i)] + opt.margin, opt.min_box);
        volume *= box_[static_cast<size_t>(i)] + 2;
        if (volume > opt.max_cells)
            throw error(errc::budget_exceeded,
                        "value box " + vec_str(box_) + " exceeds the cell budget " +
                            std::to_string(opt.max_cells));
    }
    matrix_ = std::make_unique<monomial_matrix>(c, box_, opt.max_cells);

    dims_.resize(static_cast<size_t>(r_));
    strides_.resize(static_cast<size_t>(r_));
    size_t total = 1;
    for (size_t i = static_cast<size_t>(r_); i-- > 0;) {
        dims_[i] = box_[i] + 2;
        strides_[i] = total;
        total *= static_cast<size_t>(dims_[i]);
    }
    h_.assign(total, 0);

    fill_table(std::max(1, opt.threads));

    // A posteriori check of the conductor formula: c(v) must equal r on all
    // corners of [delta, B].
    for (unsigned mask = 0; mask < (1u << r_); ++mask) {
        value_vec corner(static_cast<size_t>(r_));
        for (int i = 0; i < r_; ++i)
            corner[static_cast<size_t>(i)] = (mask & (1u << i))
                                                 ? box_[static_cast<size_t>(i)]
                                                 : delta_[static_cast<size_t>(i)];
        if (dim_c(corner) != r_)
            throw error(errc::not_stabilized,
                        "c" + vec_str(corner) + " != " + std::to_string(r_) +
                            " beyond the conductor; conductor vector is wrong");
    }
}

void filtration_engine::fill_table(int threads) {
    const std::vector<std::vector<rational>> basis = reduced_row_basis(*matrix_);
    basis_rank_ = static_cast<int>(basis.size());
    basis_cols_.assign(static_cast<size_t>(matrix_->num_cols()),
                       std::vector<rational>(static_cast<size_t>(basis_rank_)));
    for (int j = 0; j < matrix_->num_cols(); ++j)
        for (int i = 0; i < basis_rank_; ++i)
            basis_cols_[static_cast<size_t>(j)][static_cast<size_t>(i)] =
                basis[static_cast<size_t>(i)][static_cast<size_t>(j)];

    if (r_ == 1 || threads <= 1 || dims_[0] < 2) {
        for (int top = 0; top < dims_[0]; ++top) fill_slice(top, h_);
        return;
    }

    const int nthreads = std::min<int>(threads, dims_[0]);
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(nthreads));
    for (int t = 0; t < nthreads; ++t)
        pool.emplace_back([this, t, nthreads] {
            for (int top = t; top < dims_[0]; top += nthreads) fill_slice(top, h_);
        });
    for (auto& th : pool) th.join();
}

// Fills h(top, *, ..., *). Thresholds on each axis run 0 .. B_i + 1; the
// state after threshold v_i spans the columns (i, k) with k < v_i. Slices
// write disjoint table regions, so parallel slices need no locking.
void filtration_engine::fill_slice(int top, std::vector<int32_t>& out) const {
    q_echelon state(basis_rank_);
    for (int k = 0; k < top; ++k)
        state.add(basis_cols_[static_cast<size_t>(matrix_->col_index(0, k))]);

    if (r_ == 1) {
        out[static_cast<size_t>(top) * strides_[0]] = static_cast<int32_t>(state.rank());
        return;
    }

    value_vec v(static_cast<size_t>(r_), 0);
    v[0] = top;
    auto descend = [&](auto&& self, int level, q_echelon& st) -> void {
        for (int t = 0; t < dims_[static_cast<size_t>(level)]; ++t) {
            v[static_cast<size_t>(level)] = t;
            if (t > 0)
                st.add(basis_cols_[static_cast<size_t>(matrix_->col_index(level, t - 1))]);
            if (level + 1 == r_) {
                size_t idx = 0;
                for (size_t i = 0; i < v.size(); ++i)
                    idx += static_cast<size_t>(v[i]) * strides_[i];
                out[idx] = static_cast<int32_t>(st.rank());
            } else {
                q_echelon copy = st;
                self(self, level + 1, copy);
            }
        }
    };
    descend(descend, 1, state);
}

int filtration_engine::hilbert(const value_vec& v) const {
    size_t idx = 0;
    for (size_t i = 0; i < v.size(); ++i) {
        const int vi = std::max(v[i], 0);
        if (vi > box_[i] + 1)
            throw error(errc::out_of_box,
                        "h requested at " + vec_str(v) + ", box is " + vec_str(box_));
        idx += static_cast<size_t>(vi) * strides_[i];
    }
    return h_[idx];
}

int filtration_engine::dim_c(value_vec v) const {
    for (int& x : v) x = std::max(x, -1);
    return hilbert(vec_plus_ones(v)) - hilbert(v);
}

int filtration_engine::subspace_dim(unsigned subset_mask, const value_vec& v) const {
    return hilbert(vec_plus_ones(v)) - hilbert(add_subset_ones(v, subset_mask));
}

bool filtration_engine::member(const value_vec& v) const {
    const int c = dim_c(v);
    if (c <= 0) return false;
    // A subspace lies in a finite union of hyperplanes iff it lies in one.
    for (int i = 0; i < r_; ++i)
        if (subspace_dim(1u << i, v) == c) return false;
    return true;
}

int filtration_engine::fiber_euler(const value_vec& v) const {
    int chi = 0;
    for (unsigned mask = 0; mask < (1u << r_); ++mask) {
        const int h = hilbert(add_subset_ones(v, mask));
        chi += (__builtin_popcount(mask) % 2 == 1) ? h : -h;
    }
    return chi;
}

std::vector<fiber_data> filtration_engine::fiber_table() const {
    std::vector<fiber_data> out;
    const value_vec zero(static_cast<size_t>(r_), 0);
    for (const value_vec& v : graded_lex_points(zero, box_)) {
        fiber_data f;
        f.v = v;
        f.c = dim_c(v);
        f.d.resize(1u << r_);
        for (unsigned mask = 0; mask < (1u << r_); ++mask)
            f.d[mask] = subspace_dim(mask, v);
        f.member = member(v);
        f.chi = fiber_euler(v);
        out.push_back(std::move(f));
    }
    return out;
}

box_series filtration_engine::c_table() const {
    const value_vec lo(static_cast<size_t>(r_), -1);
    box_series s(lo, box_);
    value_vec v = lo;
    do {
        s.set(v, dim_c(v));
    } while (next_in_box(v, lo, box_));
    return s;
}

box_series filtration_engine::chi_table() const {
    const value_vec lo(static_cast<size_t>(r_), 0);
    box_series s(lo, box_);
    value_vec v = lo;
    do {
        s.set(v, fiber_euler(v));
    } while (next_in_box(v, lo, box_));
    return s;
}

} // namespace alexpoly
