#include "alexpoly/pipeline.hpp"

#include <algorithm>

#include "alexpoly/errors.hpp"

namespace alexpoly {

alexander_result alexander_via_dimensions(const filtration_engine& e) {
    alexander_result out;
    out.r = e.r();
    out.via = route::dimensions;
    const box_series ct = e.c_table();
    if (out.r == 1) {
        out.zeta_window.resize(static_cast<size_t>(e.box()[0]) + 1);
        for (int v = 0; v <= e.box()[0]; ++v)
            out.zeta_window[static_cast<size_t>(v)] = ct.at(value_vec{v});
        return out;
    }
    out.pprime = difference_transform(ct, e.delta());
    out.delta = divide_exact_by_tprod_minus_one(out.pprime);
    out.divisibility_ok = true;
    return out;
}

alexander_result alexander_via_euler(const filtration_engine& e) {
    alexander_result out;
    out.r = e.r();
    out.via = route::euler;
    const box_series chi = e.chi_table();
    if (out.r == 1) {
        out.zeta_window.resize(static_cast<size_t>(e.box()[0]) + 1);
        for (int v = 0; v <= e.box()[0]; ++v)
            out.zeta_window[static_cast<size_t>(v)] = chi.at(value_vec{v});
        return out;
    }
    laurent_poly p(out.r);
    value_vec v(static_cast<size_t>(out.r), 0);
    do {
        const long long c = chi.at(v);
        if (c == 0) continue;
        for (int i = 0; i < out.r; ++i)
            if (v[static_cast<size_t>(i)] > e.delta()[static_cast<size_t>(i)])
                throw error(errc::not_stabilized,
                            "fiber Euler characteristic nonzero on the box margin at " +
                                vec_str(v));
        p.set_term(v, c);
    } while (next_in_box(v, value_vec(static_cast<size_t>(out.r), 0), e.box()));
    out.delta = p;
    return out;
}

verdicts cross_check(const filtration_engine& e, const alexander_result& thm1,
                     const alexander_result& thm2) {
    verdicts v;
    const int r = thm1.r;
    if (r == 1) {
        v.thm1_eq_thm2 = thm1.zeta_window == thm2.zeta_window;
        v.divisibility = true; // the Proposition concerns r > 1 only
        v.normalized = !thm1.zeta_window.empty() && thm1.zeta_window[0] == 1 &&
                       std::all_of(thm1.zeta_window.begin(), thm1.zeta_window.end(),
                                   [](long long c) { return c == 0 || c == 1; });
        v.support_in_semigroup = true;
        for (size_t k = 0; k < thm1.zeta_window.size(); ++k)
            if (thm1.zeta_window[k] != 0 && !e.member(value_vec{static_cast<int>(k)}))
                v.support_in_semigroup = false;
        return v;
    }
    v.thm1_eq_thm2 = thm1.delta == thm2.delta;
    v.divisibility = thm1.divisibility_ok;
    v.normalized = thm1.divisibility_ok && thm1.delta.constant_term() == 1 &&
                   !thm1.delta.has_negative_exponent();
    v.support_in_semigroup = thm1.divisibility_ok;
    if (thm1.divisibility_ok)
        for (const auto& [exp, c] : thm1.delta.terms())
            if (!e.member(exp)) v.support_in_semigroup = false;
    return v;
}

laurent_poly knot_polynomial(const std::vector<long long>& zeta_window, long conductor) {
    laurent_poly p(1);
    for (size_t k = 0; k < zeta_window.size(); ++k) {
        const long long c = zeta_window[k] - (k > 0 ? zeta_window[k - 1] : 0);
        if (c == 0) continue;
        if (static_cast<long>(k) > conductor)
            throw error(errc::not_stabilized,
                        "knot polynomial has a term of degree " + std::to_string(k) +
                            " beyond the conductor " + std::to_string(conductor));
        p.set_term(value_vec{static_cast<int>(k)}, c);
    }
    return p;
}

analysis_report analyze(const curve& c, const pipeline_options& opt) {
    engine_options eopt;
    eopt.margin = opt.margin;
    eopt.max_cells = opt.max_cells;
    eopt.threads = opt.threads;
    eopt.min_box = opt.order.value_or(0);
    const filtration_engine e(c, eopt);

    analysis_report rep(c);
    rep.box = e.box();
    rep.fibers = e.fiber_table();

    bool divisible = true;
    try {
        rep.thm1 = alexander_via_dimensions(e);
    } catch (const error& err) {
        if (err.kind() != errc::not_divisible) throw;
        divisible = false;
        rep.thm1.r = e.r();
        rep.thm1.via = route::dimensions;
        rep.thm1.divisibility_ok = false;
    }
    rep.thm2 = alexander_via_euler(e);

    if (divisible) {
        rep.checks = cross_check(e, rep.thm1, rep.thm2);
    } // else: all verdicts stay false

    const int min_box = *std::min_element(rep.box.begin(), rep.box.end());
    rep.zeta_order = std::min(opt.order.value_or(min_box), min_box);
    rep.zeta_coeffs = specialize_diagonal(e.chi_table(), rep.zeta_order);

    if (divisible) {
        // Diagonal consistency between the two routes on the shared window.
        const laurent_poly diag1 = e.r() == 1
                                       ? laurent_poly(1)
                                       : specialize_diagonal(rep.thm1.delta);
        for (int i = 0; i <= rep.zeta_order; ++i) {
            const long long a = e.r() == 1
                                    ? rep.thm1.zeta_window[static_cast<size_t>(i)]
                                    : diag1.coeff(value_vec{i});
            if (a != rep.zeta_coeffs[static_cast<size_t>(i)]) rep.checks.thm1_eq_thm2 = false;
        }
    }

    if (e.r() == 1) {
        if (divisible) {
            rep.knot = knot_polynomial(rep.thm1.zeta_window, c.branch(0).semigroup.conductor);
            rep.alexander = rep.knot;
        }
    } else if (divisible) {
        rep.alexander = rep.thm1.delta;
    }
    return rep;
}

} // namespace alexpoly
