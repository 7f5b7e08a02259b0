#include <CLI11.hpp>
#include <fstream>
#include <functional>
#include <iostream>

#include "aode/parser.hpp"
#include "aode/reports.hpp"

namespace {

using aode::Json;

int run_guarded(const std::function<void()>& body) {
    try {
        body();
        return 0;
    } catch (const aode::ParseError& e) {
        std::cerr << aode::error_json("parse_error", e.what(), e.line(), e.col()).dump() << "\n";
        return 2;
    } catch (const aode::PreconditionError& e) {
        std::cerr << aode::error_json("precondition_violation", e.what()).dump() << "\n";
        return 3;
    } catch (const aode::UnsupportedRangeError& e) {
        std::cerr << aode::error_json("resource_budget", e.what()).dump() << "\n";
        return 4;
    } catch (const std::exception& e) {
        std::cerr << aode::error_json("internal_error", e.what()).dump() << "\n";
        return 1;
    }
}

std::vector<std::string> corpus_lines(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw aode::PreconditionError("cannot open corpus file: " + path);
    std::vector<std::string> lines;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        lines.push_back(line);
    }
    return lines;
}

// Runs `op` on the single expression or on every corpus line (JSON-lines).
int run_equation_command(const std::string& expr, const std::string& corpus,
                         const std::function<Json(const std::string&)>& op) {
    if (corpus.empty()) {
        return run_guarded([&] { std::cout << op(expr).dump() << "\n"; });
    }
    int rc = 0;
    for (const auto& line : corpus_lines(corpus)) {
        int r = run_guarded([&] { std::cout << op(line).dump() << "\n"; });
        if (r != 0) rc = r;
    }
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact-arithmetic analyzer for first-order algebraic ODEs f(t, y, y') = 0"};
    app.require_subcommand(1);

    std::string expr, expr2, corpus;
    int cap = 6;
    uint64_t seed = 0;
    int max_steps = 12;
    bool worst_case_s = false;
    bool json_out = true;

    auto* analyze = app.add_subcommand(
        "analyze", "movable-singularity index, comparability, irreducibility, degrees");
    analyze->add_option("expression", expr, "equation, e.g. \"2*y' + t*y^3 + y^2\"");
    analyze->add_option("--corpus", corpus, "file with one equation per line (JSON-lines out)");
    analyze->add_flag("--json", json_out, "emit JSON (default)");

    auto* bound = app.add_subcommand("bound", "rational-solution degree bound with full ledger");
    bound->add_option("expression", expr, "equation");
    bound->add_option("--corpus", corpus, "file with one equation per line");
    bound->add_flag("--worst-case-s", worst_case_s,
                    "use s = ceil(9n^2/2) instead of the curve-derived estimate");
    bound->add_flag("--json", json_out, "emit JSON (default)");

    auto* solve = app.add_subcommand("solve", "find rational solutions up to a degree cap");
    solve->add_option("expression", expr, "equation");
    solve->add_option("--corpus", corpus, "file with one equation per line");
    auto* cap_opt = solve->add_option("--cap", cap, "degree cap for numerator and denominator");
    solve->add_flag("--json", json_out, "emit JSON (default)");

    auto* curve = app.add_subcommand("curve", "projective plane-curve operations");
    curve->require_subcommand(1);
    auto* sing = curve->add_subcommand("singularities", "find and classify singular points");
    sing->add_option("expression", expr, "homogeneous curve in x0, x1, x2")->required();
    auto* quad = curve->add_subcommand("quad", "standard quadratic transformation");
    quad->add_option("expression", expr, "homogeneous curve")->required();
    auto* resolve_cmd = curve->add_subcommand("resolve", "resolve to ordinary singularities");
    resolve_cmd->add_option("expression", expr, "homogeneous curve")->required();
    resolve_cmd->add_option("--seed", seed, "seed for the excellent-position search");
    resolve_cmd->add_option("--max-steps", max_steps, "step budget");
    auto* common = curve->add_subcommand("common-points", "rational common points of two curves");
    common->add_option("first", expr, "first curve")->required();
    common->add_option("second", expr2, "second curve")->required();

    auto* height = app.add_subcommand("height", "heights T(.) over Q(t)");
    height->require_subcommand(1);
    auto* h_rf = height->add_subcommand("ratfunc", "height of an element of Q(t)");
    h_rf->add_option("expression", expr, "rational function in t")->required();
    auto* h_pt = height->add_subcommand("point", "height of a projective tuple");
    h_pt->add_option("expression", expr, "comma-separated coordinates")->required();
    auto* h_poly = height->add_subcommand("poly", "height of a polynomial over Q(t)");
    h_poly->add_option("expression", expr, "polynomial in x0, x1, x2 with t in coefficients")
        ->required();
    auto* h_alg = height->add_subcommand("algebraic", "height from a minimal polynomial g(t, x)");
    h_alg->add_option("expression", expr, "irreducible bivariate polynomial in t, x")->required();
    auto* h_mat = height->add_subcommand("matrix", "height of an invertible 3x3 matrix");
    h_mat->add_option("expression", expr, "rows 'a,b,c;d,e,f;g,h,i'")->required();

    CLI11_PARSE(app, argc, argv);
    (void)json_out;

    if (*analyze) {
        return run_equation_command(expr, corpus, [](const std::string& text) {
            return aode::analyze_report(aode::parse_aode(text));
        });
    }
    if (*bound) {
        const auto mode = worst_case_s ? aode::SMode::WorstCase : aode::SMode::CurveDerived;
        return run_equation_command(expr, corpus, [mode](const std::string& text) {
            return aode::bound_report_json(aode::degree_bound(aode::parse_aode(text), mode));
        });
    }
    if (*solve) {
        const bool defaulted = cap_opt->count() == 0;
        return run_equation_command(expr, corpus, [cap, defaulted](const std::string& text) {
            auto sols = aode::find_rational_solutions(aode::parse_aode(text), cap);
            return aode::solution_set_json(sols, defaulted);
        });
    }
    if (*sing) {
        return run_guarded([&] {
            auto F = aode::parse_curve(expr);
            std::cout << aode::singular_report_json(aode::find_singular_points(F)).dump() << "\n";
        });
    }
    if (*quad) {
        return run_guarded([&] {
            auto F = aode::parse_curve(expr);
            auto G = aode::standard_quadratic(F);
            Json j;
            j["input"] = F.poly().str();
            j["transformed"] = G.poly().str();
            j["degree"] = G.degree();
            std::cout << j.dump() << "\n";
        });
    }
    if (*resolve_cmd) {
        return run_guarded([&] {
            auto F = aode::parse_curve(expr);
            auto trace = aode::resolve(F, max_steps, seed);
            std::cout << aode::resolution_trace_json(trace).dump() << "\n";
        });
    }
    if (*common) {
        return run_guarded([&] {
            auto F = aode::parse_curve(expr);
            auto G = aode::parse_curve(expr2);
            std::cout << aode::points_json(aode::common_points(F, G)).dump() << "\n";
        });
    }
    if (*h_rf) {
        return run_guarded([&] {
            auto r = aode::parse_ratfunc(expr);
            Json j;
            j["input"] = r.str();
            j["height"] = aode::height_ratfunc(r).value().str();
            std::cout << j.dump() << "\n";
        });
    }
    if (*h_pt) {
        return run_guarded([&] {
            auto coords = aode::parse_point(expr);
            Json j;
            j["height"] = aode::height_point(coords).value().str();
            std::cout << j.dump() << "\n";
        });
    }
    if (*h_poly) {
        return run_guarded([&] {
            auto f = aode::parse_poly_over_qt(expr);
            Json j;
            j["input"] = f.str();
            j["height"] = aode::height_poly(f).value().str();
            std::cout << j.dump() << "\n";
        });
    }
    if (*h_alg) {
        return run_guarded([&] {
            aode::AlgebraicElement a{aode::parse_algebraic(expr)};
            Json j;
            j["min_poly"] = a.min_poly.str();
            j["height"] = aode::height_algebraic(a).value().str();
            std::cout << j.dump() << "\n";
        });
    }
    if (*h_mat) {
        return run_guarded([&] {
            auto m = aode::parse_matrix(expr);
            Json j;
            j["height"] = aode::height_matrix(m).value().str();
            std::cout << j.dump() << "\n";
        });
    }
    return 0;
}
