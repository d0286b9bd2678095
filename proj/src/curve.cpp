#include "alexpoly/curve.hpp"

#include <string>

#include "alexpoly/errors.hpp"
#include "alexpoly/resultant.hpp"

namespace alexpoly {

namespace {

std::string branch_label(const branch_param& b, size_t idx) {
    return b.name.empty() ? "#" + std::to_string(idx + 1) : b.name;
}

// Coefficient vector of x(T) - X by powers of T. x has no constant term, so
// the T^0 slot holds -X alone.
std::vector<bivar_poly> elim_coeffs(const uni_poly& p, const bivar_poly& var) {
    const int d = std::max(p.degree(), 0);
    std::vector<bivar_poly> out(static_cast<size_t>(d) + 1);
    out[0] = -var;
    for (const auto& [e, c] : p.terms()) out[static_cast<size_t>(e)] += bivar_poly::constant(c);
    return out;
}

} // namespace

bivar_poly implicitize(const branch_param& b) {
    if (b.x.is_zero() && b.y.is_zero())
        throw error(errc::degenerate_parametrization,
                    "branch '" + b.name + "' parametrizes a point");
    bivar_poly res =
        sylvester_resultant(elim_coeffs(b.x, bivar_poly::var_x()), elim_coeffs(b.y, bivar_poly::var_y()));
    if (res.is_zero())
        throw error(errc::internal, "implicitization produced the zero polynomial");
    res = res.normalized_primitive();
    if (!eval_on_branch_exact(res, b).is_zero())
        throw error(errc::internal, "implicit equation does not vanish on its branch");
    return res;
}

curve curve::validate(std::vector<branch_param> branches, const validate_options& opt) {
    if (branches.empty()) throw error(errc::empty_input, "a curve needs at least one branch");
    if (static_cast<int>(branches.size()) > opt.max_branches)
        throw error(errc::too_many_branches,
                    "curve has " + std::to_string(branches.size()) + " branches, limit is " +
                        std::to_string(opt.max_branches));

    curve c;
    const size_t r = branches.size();
    c.branches_.reserve(r);
    for (size_t i = 0; i < r; ++i) {
        branch_param& b = branches[i];
        if (b.x.is_zero() && b.y.is_zero())
            throw error(errc::non_positive_order,
                        "branch " + branch_label(b, i) + ": both components are zero");
        if (b.x.order() == 0 || b.y.order() == 0)
            throw error(errc::non_positive_order,
                        "branch " + branch_label(b, i) +
                            ": parametrization has a constant term");

        branch_info info;
        info.param = std::move(b);
        info.multiplicity = info.param.multiplicity();
        info.equation = implicitize(info.param);
        if (!is_squarefree(info.equation))
            throw error(errc::non_primitive,
                        "branch " + branch_label(info.param, i) +
                            ": parametrization traverses its image multiple times");
        info.semigroup = branch_value_semigroup(info.param, opt.semigroup_max_bound);
        c.branches_.push_back(std::move(info));
    }

    c.intersections_.assign(r, std::vector<long>(r, 0));
    for (size_t i = 0; i < r; ++i) {
        for (size_t j = i + 1; j < r; ++j) {
            const uni_poly comp_ij =
                eval_on_branch_exact(c.branches_[i].equation, c.branches_[j].param);
            if (comp_ij.is_zero())
                throw error(errc::duplicate_branch,
                            "branches " + branch_label(c.branches_[i].param, i) + " and " +
                                branch_label(c.branches_[j].param, j) +
                                " parametrize the same component");
            const uni_poly comp_ji =
                eval_on_branch_exact(c.branches_[j].equation, c.branches_[i].param);
            if (comp_ji.is_zero())
                throw error(errc::duplicate_branch,
                            "branches " + branch_label(c.branches_[i].param, i) + " and " +
                                branch_label(c.branches_[j].param, j) +
                                " parametrize the same component");
            const long mij = comp_ij.order();
            const long mji = comp_ji.order();
            if (mij != mji)
                throw error(errc::internal, "intersection multiplicity not symmetric");
            c.intersections_[i][j] = mij;
            c.intersections_[j][i] = mij;
        }
    }

    c.delta_.resize(r);
    for (size_t i = 0; i < r; ++i) {
        long d = c.branches_[i].semigroup.conductor;
        for (size_t j = 0; j < r; ++j)
            if (j != i) d += c.intersections_[i][j];
        c.delta_[i] = static_cast<int>(d);
    }
    return c;
}

long curve::intersection_multiplicity(int i, int j) const {
    if (i == j)
        throw error(errc::same_branch, "intersection multiplicity of a branch with itself");
    return intersections_[static_cast<size_t>(i)][static_cast<size_t>(j)];
}

bivar_poly curve::product_equation() const {
    bivar_poly f = bivar_poly::constant(rational(1));
    for (const auto& b : branches_) f = f * b.equation;
    return f;
}

} // namespace alexpoly
