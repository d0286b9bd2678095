#pragma once

#include <utility>
#include <vector>

#include "alexpoly/box.hpp"
#include "alexpoly/curve.hpp"
#include "alexpoly/rational.hpp"

namespace alexpoly {

// Exact model of the function ring on the curve, truncated to a box: one row
// per monomial x^a y^b with a + b <= degree_bound, one column per pair
// (branch i, t-order k) with k <= box_i; the entry is the coefficient of t^k
// in the image of the monomial on branch i.
//
// degree_bound is the smallest D with multiplicity_i * (D + 1) > box_i for
// every branch, so dropped higher-degree monomials vanish to order beyond
// the box on every branch and no rank inside the box can change.
class monomial_matrix {
  public:
    monomial_matrix(const curve& c, value_vec box, long long max_cells);

    int num_branches() const { return static_cast<int>(trunc_orders_.size()); }
    const value_vec& box() const { return box_; }
    int degree_bound() const { return degree_bound_; }
    const std::vector<int>& trunc_orders() const { return trunc_orders_; } // N_i = box_i + 1

    const std::vector<std::pair<int, int>>& monomials() const { return monomials_; }
    int num_rows() const { return static_cast<int>(monomials_.size()); }
    int num_cols() const { return total_cols_; }

    int col_index(int branch, int k) const { return col_offset_[static_cast<size_t>(branch)] + k; }
    const rational& entry(int row, int branch, int k) const {
        return rows_[static_cast<size_t>(row)][static_cast<size_t>(col_index(branch, k))];
    }
    const std::vector<rational>& row(int i) const { return rows_[static_cast<size_t>(i)]; }

    // Rank of the column submatrix {(i, k) : k < v_i}, by fraction-free
    // (Bareiss) integer elimination after clearing row denominators. This is
    // the reference, per-v computation; the filtration engine's shared
    // echelon sweep must agree with it everywhere.
    int rank_of_submatrix(const value_vec& v) const;

  private:
    value_vec box_;
    int degree_bound_ = 0;
    std::vector<int> trunc_orders_;
    std::vector<std::pair<int, int>> monomials_;
    std::vector<int> col_offset_;
    int total_cols_ = 0;
    std::vector<std::vector<rational>> rows_;
};

} // namespace alexpoly
