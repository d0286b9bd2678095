#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "alexpoly/box.hpp"
#include "alexpoly/curve.hpp"
#include "alexpoly/laurent.hpp"
#include "alexpoly/matrix.hpp"

namespace alexpoly {

struct engine_options {
    int margin = 2;            // box = delta + margin, componentwise
    int min_box = 0;           // raise every box side to at least this (zeta windows)
    long long max_cells = 10'000'000;
    int threads = 1;
};

// Everything the fiber of the extended semigroup over v determines: the
// dimension c(v), the dimensions d(S, v) of the coordinate-subspace slices,
// membership of v in the value semigroup, and the Euler characteristic of
// the projectivized fiber.
struct fiber_data {
    value_vec v;
    int c = 0;
    std::vector<int> d; // indexed by subset bitmask, size 2^r
    bool member = false;
    int chi = 0;
};

// The multi-index Hilbert function h(v) = dim O_C / J(v) on a finite box,
// computed once by exact linear algebra over the monomial matrix, plus the
// derived fiber quantities.
//
// h is evaluated for v in [-1, B + 1] componentwise (negative coordinates
// clamp: orders below zero impose no condition). The whole table is filled
// at construction by a nested sweep that grows one column at a time and
// keeps reduced echelon states per prefix, which is exactly rank-equivalent
// to the per-v computation on the monomial matrix.
class filtration_engine {
  public:
    filtration_engine(const curve& c, const engine_options& opt = {});

    int r() const { return r_; }
    const value_vec& box() const { return box_; }
    const value_vec& delta() const { return delta_; }
    const monomial_matrix& matrix() const { return *matrix_; }

    // rank of {(i, k) : k < v_i}; throws OutOfBox beyond B + 1
    int hilbert(const value_vec& v) const;
    // c(v) = h(v + 1) - h(v), defined for v <= B; r for v >= delta
    int dim_c(value_vec v) const;
    // d(S, v) = h(v + 1) - h(v + 1_S); antitone in S; d(full set) = 0
    int subspace_dim(unsigned subset_mask, const value_vec& v) const;
    // v lies in the value semigroup iff the fiber is nonempty
    bool member(const value_vec& v) const;
    // Euler characteristic of the projectivized fiber over v
    int fiber_euler(const value_vec& v) const;

    // All v in [0, B], graded-lex.
    std::vector<fiber_data> fiber_table() const;

    // c(v) on the window [-1, B].
    box_series c_table() const;
    // chi(P(F_v)) on the window [0, B].
    box_series chi_table() const;

  private:
    void fill_table(int threads);
    void fill_slice(int top, std::vector<int32_t>& out) const;

    int r_;
    value_vec box_;
    value_vec delta_;
    std::unique_ptr<monomial_matrix> matrix_;
    int basis_rank_ = 0;
    std::vector<std::vector<rational>> basis_cols_; // reduced column vectors, length basis_rank_
    std::vector<int> dims_;                         // per axis: B_i + 2 thresholds (0 .. B_i + 1)
    std::vector<size_t> strides_;
    std::vector<int32_t> h_;
};

} // namespace alexpoly
