#include "alexpoly/reporting.hpp"

#include <json.hpp>

#include <sstream>

#include "alexpoly/curvefile.hpp"

namespace alexpoly {

using ordered_json = nlohmann::ordered_json;

namespace {

ordered_json poly_terms_json(const laurent_poly& p) {
    ordered_json terms = ordered_json::array();
    for (const auto& [e, c] : p.terms()) {
        ordered_json t;
        t["exp"] = e;
        t["coef"] = c;
        terms.push_back(std::move(t));
    }
    return terms;
}

ordered_json checks_obj(const verdicts& v) {
    ordered_json j;
    j["thm1_eq_thm2"] = v.thm1_eq_thm2;
    j["normalized"] = v.normalized;
    j["support_in_semigroup"] = v.support_in_semigroup;
    j["divisibility"] = v.divisibility;
    return j;
}

} // namespace

std::string emit_json(const analysis_report& rep) {
    ordered_json j;
    j["r"] = rep.c.num_branches();
    ordered_json branches = ordered_json::array();
    for (const auto& b : rep.c.branches()) {
        ordered_json bj;
        bj["name"] = b.param.name;
        bj["multiplicity"] = b.multiplicity;
        bj["generators"] = b.semigroup.generators;
        bj["conductor"] = b.semigroup.conductor;
        branches.push_back(std::move(bj));
    }
    j["branches"] = std::move(branches);
    j["intersection"] = rep.c.intersection_matrix();
    j["delta"] = rep.c.conductor_vector();
    j["alexander"] = ordered_json{{"terms", poly_terms_json(rep.alexander)}};
    j["zeta"] = ordered_json{{"coeffs", rep.zeta_coeffs}};
    j["checks"] = checks_obj(rep.checks);
    return j.dump() + "\n";
}

std::string checks_json(const verdicts& v) {
    ordered_json j;
    j["checks"] = checks_obj(v);
    return j.dump() + "\n";
}

std::string render_checks_text(const verdicts& v) {
    std::ostringstream os;
    os << "thm1_eq_thm2: " << (v.thm1_eq_thm2 ? "PASS" : "FAIL") << "\n"
       << "normalized: " << (v.normalized ? "PASS" : "FAIL") << "\n"
       << "support_in_semigroup: " << (v.support_in_semigroup ? "PASS" : "FAIL") << "\n"
       << "divisibility: " << (v.divisibility ? "PASS" : "FAIL") << "\n";
    return os.str();
}

std::string render_text_report(const analysis_report& rep) {
    std::ostringstream os;
    const int r = rep.c.num_branches();
    os << "curve with " << r << (r == 1 ? " branch" : " branches") << "\n";
    for (const auto& b : rep.c.branches()) {
        os << "  branch " << (b.param.name.empty() ? "?" : b.param.name) << ": x = "
           << render_poly(b.param.x) << ", y = " << render_poly(b.param.y) << "\n";
        os << "    multiplicity " << b.multiplicity << ", equation " << b.equation.str()
           << "\n";
        os << "    semigroup <";
        for (size_t k = 0; k < b.semigroup.generators.size(); ++k)
            os << (k ? ", " : "") << b.semigroup.generators[k];
        os << ">, conductor " << b.semigroup.conductor << "\n";
    }
    if (r > 1) {
        os << "intersection multiplicities:";
        for (int i = 0; i < r; ++i)
            for (int j = i + 1; j < r; ++j)
                os << " (" << i + 1 << "." << j + 1 << ") = "
                   << rep.c.intersection_matrix()[static_cast<size_t>(i)][static_cast<size_t>(j)];
        os << "\n";
    }
    os << "conductor vector delta = " << vec_str(rep.c.conductor_vector()) << "\n";
    os << "value box = " << vec_str(rep.box) << "\n";
    size_t members = 0;
    for (const auto& f : rep.fibers) members += f.member ? 1 : 0;
    os << "fibers: " << members << " of " << rep.fibers.size()
       << " value vectors in the box are semigroup members\n";
    if (r == 1) {
        os << "zeta window (= Alexander invariant, one branch): "
           << render_series_window(rep.thm1.zeta_window) << " + O(t^"
           << rep.thm1.zeta_window.size() << ")\n";
        os << "knot polynomial: " << canonical_render(rep.knot) << "\n";
    } else {
        os << "P' = " << canonical_render(rep.thm1.pprime) << "\n";
        os << "alexander polynomial: " << canonical_render(rep.alexander) << "\n";
    }
    os << "zeta diagonal up to t^" << rep.zeta_order << ": ";
    os << render_series_window(rep.zeta_coeffs) << "\n";
    os << render_checks_text(rep.checks);
    return os.str();
}

std::string error_json(const error& e) {
    ordered_json j;
    j["error"] = ordered_json{{"kind", errc_name(e.kind())}, {"message", e.what()}};
    return j.dump() + "\n";
}

} // namespace alexpoly
