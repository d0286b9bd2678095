#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "alexpoly/curvefile.hpp"
#include "alexpoly/errors.hpp"
#include "alexpoly/pipeline.hpp"
#include "alexpoly/reporting.hpp"

namespace {

using namespace alexpoly;
using ordered_json = nlohmann::ordered_json;

struct global_opts {
    std::string format = "text";
    int margin = 2;
    long long max_cells = 10'000'000;
    int threads = 1;
    int order = -1; // -1: pick the largest safe window
};

bool json_mode(const global_opts& g) { return g.format == "json"; }

pipeline_options to_pipeline_options(const global_opts& g) {
    pipeline_options p;
    p.margin = g.margin;
    p.max_cells = g.max_cells;
    p.threads = g.threads;
    if (g.order >= 0) p.order = g.order;
    return p;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw error(errc::syntax_error, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

curve load_curve(const std::string& path) {
    return curve::validate(parse_curve(read_file(path)));
}

int run_analyze(const std::string& path, const global_opts& g, bool verdicts_only) {
    const analysis_report rep = analyze(load_curve(path), to_pipeline_options(g));
    if (json_mode(g))
        std::cout << (verdicts_only ? checks_json(rep.checks) : emit_json(rep));
    else
        std::cout << (verdicts_only ? render_checks_text(rep.checks) : render_text_report(rep));
    return rep.checks.all_pass() ? 0 : 1;
}

int run_alexander(const std::string& path, const global_opts& g) {
    const analysis_report rep = analyze(load_curve(path), to_pipeline_options(g));
    if (!rep.checks.all_pass()) {
        if (json_mode(g))
            std::cout << emit_json(rep);
        else
            std::cout << "cross-checks failed:\n" << render_checks_text(rep.checks);
        return 1;
    }
    const int r = rep.c.num_branches();
    if (json_mode(g)) {
        ordered_json j;
        j["r"] = r;
        ordered_json terms = ordered_json::array();
        for (const auto& [e, c] : rep.alexander.terms())
            terms.push_back(ordered_json{{"exp", e}, {"coef", c}});
        j["alexander"] = ordered_json{{"terms", std::move(terms)}};
        if (r == 1) j["zeta"] = ordered_json{{"coeffs", rep.thm1.zeta_window}};
        std::cout << j.dump() << "\n";
        return 0;
    }
    if (r == 1) {
        std::cout << "zeta window: " << render_series_window(rep.thm1.zeta_window) << " + O(t^"
                  << rep.thm1.zeta_window.size() << ")\n";
        std::cout << "knot polynomial: " << canonical_render(rep.knot) << "\n";
    } else {
        std::cout << canonical_render(rep.alexander) << "\n";
    }
    return 0;
}

int run_zeta(const std::string& path, const global_opts& g) {
    const analysis_report rep = analyze(load_curve(path), to_pipeline_options(g));
    if (!rep.checks.all_pass()) {
        if (json_mode(g))
            std::cout << checks_json(rep.checks);
        else
            std::cout << "cross-checks failed:\n" << render_checks_text(rep.checks);
        return 1;
    }
    if (json_mode(g)) {
        ordered_json j;
        j["zeta"] = ordered_json{{"coeffs", rep.zeta_coeffs}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << render_series_window(rep.zeta_coeffs) << "\n";
    }
    return 0;
}

int run_semigroup(const std::string& path, const global_opts& g) {
    const curve c = load_curve(path);
    if (json_mode(g)) {
        ordered_json j;
        ordered_json branches = ordered_json::array();
        for (const auto& b : c.branches()) {
            ordered_json bj;
            bj["name"] = b.param.name;
            bj["multiplicity"] = b.multiplicity;
            bj["generators"] = b.semigroup.generators;
            bj["conductor"] = b.semigroup.conductor;
            bj["gaps"] = b.semigroup.gaps;
            branches.push_back(std::move(bj));
        }
        j["branches"] = std::move(branches);
        j["intersection"] = c.intersection_matrix();
        j["delta"] = c.conductor_vector();
        std::cout << j.dump() << "\n";
        return 0;
    }
    for (const auto& b : c.branches()) {
        std::cout << "branch " << b.param.name << ": generators <";
        for (size_t k = 0; k < b.semigroup.generators.size(); ++k)
            std::cout << (k ? ", " : "") << b.semigroup.generators[k];
        std::cout << ">, conductor " << b.semigroup.conductor << ", gaps {";
        for (size_t k = 0; k < b.semigroup.gaps.size(); ++k)
            std::cout << (k ? ", " : "") << b.semigroup.gaps[k];
        std::cout << "}\n";
    }
    if (c.num_branches() > 1) {
        std::cout << "intersection multiplicities:";
        for (int i = 0; i < c.num_branches(); ++i)
            for (int j = i + 1; j < c.num_branches(); ++j)
                std::cout << " (" << i + 1 << "." << j + 1
                          << ") = " << c.intersection_matrix()[static_cast<size_t>(i)][static_cast<size_t>(j)];
        std::cout << "\n";
    }
    std::cout << "delta = " << vec_str(c.conductor_vector()) << "\n";
    return 0;
}

int run_fibers(const std::string& path, const global_opts& g) {
    const curve c = load_curve(path);
    engine_options eopt;
    eopt.margin = g.margin;
    eopt.max_cells = g.max_cells;
    eopt.threads = g.threads;
    if (g.order >= 0) eopt.min_box = g.order;
    const filtration_engine e(c, eopt);
    const auto table = e.fiber_table();
    if (json_mode(g)) {
        ordered_json j;
        j["box"] = e.box();
        ordered_json rows = ordered_json::array();
        for (const auto& f : table) {
            ordered_json fj;
            fj["v"] = f.v;
            fj["c"] = f.c;
            fj["member"] = f.member;
            fj["chi"] = f.chi;
            ordered_json dims = ordered_json::array();
            for (unsigned mask = 0; mask < f.d.size(); ++mask) {
                ordered_json dj;
                ordered_json subset = ordered_json::array();
                for (int i = 0; i < e.r(); ++i)
                    if (mask & (1u << i)) subset.push_back(i + 1);
                dj["subset"] = std::move(subset);
                dj["dim"] = f.d[mask];
                dims.push_back(std::move(dj));
            }
            fj["d"] = std::move(dims);
            rows.push_back(std::move(fj));
        }
        j["fibers"] = std::move(rows);
        std::cout << j.dump() << "\n";
        return 0;
    }
    std::cout << "box " << vec_str(e.box()) << "\n";
    for (const auto& f : table)
        std::cout << "v=" << vec_str(f.v) << " c=" << f.c
                  << " member=" << (f.member ? "yes" : "no") << " chi=" << f.chi << "\n";
    return 0;
}

int run_implicitize(const std::string& path, const global_opts& g) {
    const curve c = load_curve(path);
    if (json_mode(g)) {
        ordered_json j;
        ordered_json eqs = ordered_json::array();
        for (const auto& b : c.branches())
            eqs.push_back(ordered_json{{"branch", b.param.name}, {"equation", b.equation.str()}});
        j["equations"] = std::move(eqs);
        j["product"] = c.product_equation().str();
        std::cout << j.dump() << "\n";
        return 0;
    }
    for (const auto& b : c.branches())
        std::cout << "f_" << b.param.name << " = " << b.equation.str() << "\n";
    if (c.num_branches() > 1) std::cout << "f = " << c.product_equation().str() << "\n";
    return 0;
}

int run_example(const std::string& name, const global_opts& g) {
    const std::string text = builtin_example(name);
    if (json_mode(g)) {
        ordered_json j;
        j["name"] = name;
        j["content"] = text;
        std::cout << j.dump() << "\n";
    } else {
        std::cout << text;
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    global_opts g;
    CLI::App app{"Alexander polynomials of plane curve singularities from branch parametrizations"};
    app.require_subcommand(1);
    app.add_option("--format", g.format, "Output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_option("--margin", g.margin, "Extra layers beyond the conductor box")
        ->check(CLI::Range(1, 64))
        ->capture_default_str();
    app.add_option("--max-cells", g.max_cells, "Cell budget for matrices and value boxes")
        ->capture_default_str();
    app.add_option("--threads", g.threads, "Worker threads for the Hilbert table")
        ->check(CLI::Range(1, 256))
        ->capture_default_str();
    app.add_option("--order", g.order, "Diagonal (zeta) window order");

    std::string file, example_name;
    CLI::App* analyze_cmd = app.add_subcommand("analyze", "Full report with all cross-checks");
    CLI::App* alexander_cmd = app.add_subcommand("alexander", "Alexander polynomial only");
    CLI::App* zeta_cmd = app.add_subcommand("zeta", "Monodromy zeta function window");
    CLI::App* semigroup_cmd = app.add_subcommand("semigroup", "Branch semigroups and conductor data");
    CLI::App* fibers_cmd = app.add_subcommand("fibers", "Fiber dimensions and Euler characteristics");
    CLI::App* implicitize_cmd = app.add_subcommand("implicitize", "Implicit equations of the branches");
    CLI::App* check_cmd = app.add_subcommand("check", "Consistency verdicts; exit 0 iff all pass");
    CLI::App* example_cmd = app.add_subcommand("example", "Print a built-in example curve file");
    for (CLI::App* sub : {analyze_cmd, alexander_cmd, zeta_cmd, semigroup_cmd, fibers_cmd,
                          implicitize_cmd, check_cmd}) {
        sub->add_option("file", file, "Curve file")->required();
        sub->fallthrough();
    }
    example_cmd->add_option("name", example_name, "Example name")->required();
    example_cmd->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        if (json_mode(g)) {
            std::cout << error_json(error(errc::syntax_error, e.what()));
        } else {
            std::cerr << e.what() << "\n";
        }
        return 2;
    }

    try {
        if (app.got_subcommand(analyze_cmd)) return run_analyze(file, g, false);
        if (app.got_subcommand(check_cmd)) return run_analyze(file, g, true);
        if (app.got_subcommand(alexander_cmd)) return run_alexander(file, g);
        if (app.got_subcommand(zeta_cmd)) return run_zeta(file, g);
        if (app.got_subcommand(semigroup_cmd)) return run_semigroup(file, g);
        if (app.got_subcommand(fibers_cmd)) return run_fibers(file, g);
        if (app.got_subcommand(implicitize_cmd)) return run_implicitize(file, g);
        if (app.got_subcommand(example_cmd)) return run_example(example_name, g);
    } catch (const error& e) {
        if (json_mode(g))
            std::cout << error_json(e);
        else
            std::cerr << "error: " << e.what() << "\n";
        return e.is_input_error() ? 2 : 3;
    }
    return 0;
}
