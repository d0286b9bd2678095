#pragma once

#include <string>
#include <vector>

#include "alexpoly/bivar.hpp"
#include "alexpoly/box.hpp"
#include "alexpoly/branch.hpp"
#include "alexpoly/semigroup.hpp"

namespace alexpoly {

struct validate_options {
    int max_branches = 4;
    long semigroup_max_bound = 1L << 14;
};

// One validated branch with its derived invariants.
struct branch_info {
    branch_param param;
    bivar_poly equation; // implicit equation f_i, primitive with positive lead
    int multiplicity = 0;
    branch_semigroup semigroup;
};

// The curve C = union of branches, immutable after validation.
class curve {
  public:
    static curve validate(std::vector<branch_param> branches, const validate_options& opt = {});

    int num_branches() const { return static_cast<int>(branches_.size()); }
    const std::vector<branch_info>& branches() const { return branches_; }
    const branch_info& branch(int i) const { return branches_[static_cast<size_t>(i)]; }

    long intersection_multiplicity(int i, int j) const; // requires i != j
    const std::vector<std::vector<long>>& intersection_matrix() const { return intersections_; }

    // delta_i = conductor_i + sum_{j != i} (C_i . C_j)
    const value_vec& conductor_vector() const { return delta_; }

    bivar_poly product_equation() const;

  private:
    curve() = default;

    std::vector<branch_info> branches_;
    std::vector<std::vector<long>> intersections_;
    value_vec delta_;
};

// Implicit equation of a single branch: the resultant
// Res_T(x(T) - X, y(T) - Y), reduced to a primitive polynomial with positive
// leading coefficient. Vanishes identically on the branch.
bivar_poly implicitize(const branch_param& b);

} // namespace alexpoly
