// alt-xi: evaluate the alternating zeta / Xi family, run the identity and
// regression suites, scan the critical line, and integrate the kernel.
//
// Exit codes: 0 success, 1 check/convergence/domain failure, 2 usage errors.
// Machine-greppable error lines on stderr: E_DOMAIN, E_CONV, E_PARSE.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "altxi/altxi.hpp"
#include "altxi/checks.hpp"

namespace {

using namespace altxi;

struct CommonOpts {
    double tol = 1e-14;
    int max_terms = 10000;
    int quad_points = 2000;
    std::string format = "json";
    bool tol_set = false;
};

EvalSettings settings_from(const CommonOpts& c) {
    EvalSettings st;
    st.rel_tol = c.tol;
    st.max_terms = c.max_terms;
    st.quad_points = c.quad_points;
    return st;
}

void add_common(CLI::App* cmd, CommonOpts& c) {
    cmd->add_option("--tol", c.tol, "relative tolerance (env ALT_XI_TOL overrides the default)")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--max-terms", c.max_terms, "series term budget")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--quad-points", c.quad_points, "quadrature node count")
        ->check(CLI::PositiveNumber);
    cmd->add_option("--format", c.format, "output format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));
}

// flag wins over ALT_XI_TOL, which wins over the built-in default
void apply_env_tol(CLI::App* cmd, CommonOpts& c) {
    if (cmd->count("--tol") > 0) return;
    const char* env = std::getenv("ALT_XI_TOL");
    if (!env) return;
    char* end = nullptr;
    double v = std::strtod(env, &end);
    if (end == env || *end != '\0' || !(v > 0.0))
        throw ParseError(std::string("ALT_XI_TOL is not a positive real: '") + env + "'");
    c.tol = v;
}

void emit(const OutputRecord& rec, const std::string& format) {
    if (format == "csv") {
        std::cout << csv_header() << "\n" << to_csv(rec) << "\n";
    } else {
        std::cout << to_json(rec) << "\n";
    }
}

OutputRecord eval_function(const std::string& function, Complex s,
                           const std::string& method, std::optional<double> z_arg,
                           const EvalSettings& st) {
    OutputRecord rec;
    rec.function = function;
    rec.s = s;
    auto fill = [&](const EvalResult& r) {
        rec.value = r.value;
        rec.method = to_string(r.method);
        rec.est_error = r.est_error;
        rec.terms_used = r.terms_used;
    };
    if (function == "eta") {
        if (method == "alternating") fill(eta_alternating(s, st));
        else if (method.empty() || method == "auto" || method == "quartet") fill(eta(s, st));
        else throw ParseError("eta: unknown method '" + method + "'");
    } else if (function == "zeta") {
        if (!method.empty() && method != "auto") throw ParseError("zeta: unknown method");
        fill(zeta(s, st));
    } else if (function == "xi_a" || function == "xi") {
        EvalResult r;
        if (method.empty() || method == "gamma-series") r = xi_a_gamma_series(s, st);
        else if (method == "direct") r = xi_a_direct(s, st);
        else if (method == "lower-series") r = xi_a_lower_series(s, st);
        else if (method == "critical") {
            if (s.real() != 0.5) throw DomainError("method critical requires Re s = 1/2");
            r = xi_a_critical(s.imag(), st);
        } else if (method == "quadrature") r = mellin_xi_a(s, quadrature_from_settings(st), st);
        else throw ParseError(function + ": unknown method '" + method + "'");
        if (function == "xi") {
            r.value = xi_from_xi_a(s, r.value);
        }
        fill(r);
    } else if (function == "varphi" || function == "phi") {
        if (s.imag() != 0.0)
            throw DomainError(function + ": argument must be a positive real");
        double v = function == "varphi" ? varphi(s.real(), st) : phi_series(s.real(), st);
        fill(EvalResult{Complex(v, 0.0), std::abs(v) * st.rel_tol, 0, Method::series});
    } else if (function == "gamma") {
        fill(EvalResult{gamma(s), 0.0, 0, Method::series});
    } else if (function == "lower_gamma" || function == "upper_gamma") {
        if (!z_arg) throw ParseError(function + " requires --z");
        if (function == "lower_gamma") fill(lower_gamma(s, *z_arg, st));
        else fill(upper_gamma(s, *z_arg, st));
    } else {
        throw ParseError("unknown function '" + function + "'");
    }
    return rec;
}

int run_check(const std::string& suite, const EvalSettings& st) {
    CheckList results = run_suite(suite, st);
    bool all_pass = true;
    for (const auto& r : results) {
        std::printf("%s %-55s residual=%.3e tol=%.0e\n", r.pass ? "PASS" : "FAIL",
                    r.name.c_str(), r.residual, r.tol);
        all_pass = all_pass && r.pass;
    }
    std::printf("%s: %zu checks, %zu failed\n", suite.c_str(), results.size(),
                static_cast<size_t>(std::count_if(results.begin(), results.end(),
                                                  [](const CheckResult& r) { return !r.pass; })));
    return all_pass ? 0 : 1;
}

int run_scan(double t_min, double t_max, double step, const EvalSettings& st) {
    auto result = scan_critical_line(t_min, t_max, step, st);
    std::cout << "t,xi_a,sign\n";
    for (const auto& r : result.records)
        std::cout << format_real(r.t) << "," << format_real(r.xi_a) << "," << r.sign
                  << "\n";
    std::cout << "[";
    for (size_t i = 0; i < result.zeros.size(); ++i)
        std::cout << (i ? "," : "") << format_real(result.zeros[i]);
    std::cout << "]\n";
    return 0;
}

int run_integrate(const std::string& target, std::optional<Complex> s,
                  const QuadratureSpec& spec, const CommonOpts& c) {
    EvalSettings st = settings_from(c);
    OutputRecord rec;
    rec.function = "integrate:" + target;
    EvalResult r;
    if (target == "xi_a_at") {
        if (!s) throw ParseError("integrate --target xi_a_at requires --s");
        rec.s = *s;
        r = mellin_xi_a(*s, spec, st);
    } else if (target == "varphi_plain") {
        r = special_integral_component(1.0, spec, st);
    } else if (target == "varphi_over_x") {
        r = special_integral_component(0.0, spec, st);
    } else if (target == "varphi_over_sqrtx") {
        r = special_integral_component(0.5, spec, st);
    } else {
        throw ParseError("unknown integrate target '" + target + "'");
    }
    rec.value = r.value;
    rec.method = to_string(r.method);
    rec.est_error = r.est_error;
    rec.terms_used = r.terms_used;
    emit(rec, c.format);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"alt-xi: alternating zeta / Xi function numerics"};
    app.require_subcommand(1);

    CommonOpts c_eval, c_check, c_scan, c_int;

    auto* eval = app.add_subcommand("eval", "evaluate a function at a point");
    std::string function, s_text, method;
    std::optional<double> z_arg;
    eval->add_option("--function", function,
                     "eta|zeta|xi|xi_a|varphi|phi|gamma|lower_gamma|upper_gamma")
        ->required();
    eval->add_option("--s", s_text, "complex point, e.g. 0.5+12i")->required();
    eval->add_option("--method", method, "method override (function-specific)");
    double z_val = 0.0;
    auto* z_opt = eval->add_option("--z", z_val, "second argument for lower/upper gamma");
    add_common(eval, c_eval);

    auto* check = app.add_subcommand("check", "run a named identity/regression suite");
    std::string suite;
    check
        ->add_option("--suite", suite,
                     "reflection|functional-equation|method-agreement|quartet|theta|"
                     "table1|table2|paper-example|integrals|all")
        ->required();
    add_common(check, c_check);

    auto* scan = app.add_subcommand("scan", "scan xi_a(1/2+it) over a t range");
    double t_min = 0.0, t_max = 0.0, step = 0.0;
    scan->add_option("--t-min", t_min)->required();
    scan->add_option("--t-max", t_max)->required();
    scan->add_option("--step", step)->required();
    add_common(scan, c_scan);

    auto* integrate = app.add_subcommand("integrate", "quadrature of the kernel integrals");
    std::string target, scheme = "tanh-sinh", s_int_text;
    double split_at = 1.0;
    integrate
        ->add_option("--target", target, "xi_a_at|varphi_plain|varphi_over_x|varphi_over_sqrtx")
        ->required();
    integrate->add_option("--s", s_int_text, "complex point for xi_a_at");
    integrate->add_option("--scheme", scheme, "tanh-sinh or gauss-legendre")
        ->check(CLI::IsMember({"tanh-sinh", "gauss-legendre"}));
    integrate->add_option("--split-at", split_at, "where to split (0,inf) integrals");
    add_common(integrate, c_int);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "E_PARSE: " << e.what() << "\n";
        std::cerr << app.help() << "\n";
        return 2;
    }

    try {
        if (eval->parsed()) {
            apply_env_tol(eval, c_eval);
            if (z_opt->count() > 0) z_arg = z_val;
            Complex s = parse_complex(s_text);
            OutputRecord rec = eval_function(function, s, method, z_arg, settings_from(c_eval));
            emit(rec, c_eval.format);
            return 0;
        }
        if (check->parsed()) {
            apply_env_tol(check, c_check);
            return run_check(suite, settings_from(c_check));
        }
        if (scan->parsed()) {
            apply_env_tol(scan, c_scan);
            return run_scan(t_min, t_max, step, settings_from(c_scan));
        }
        if (integrate->parsed()) {
            apply_env_tol(integrate, c_int);
            QuadratureSpec spec;
            spec.scheme = scheme == "gauss-legendre" ? QuadScheme::gauss_legendre_composite
                                                     : QuadScheme::tanh_sinh;
            spec.points = c_int.quad_points;
            spec.split_at = split_at;
            std::optional<Complex> s;
            if (!s_int_text.empty()) s = parse_complex(s_int_text);
            return run_integrate(target, s, spec, c_int);
        }
    } catch (const ParseError& e) {
        std::cerr << "E_PARSE: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "E_DOMAIN: " << e.what() << "\n";
        return 1;
    } catch (const ConvergenceError& e) {
        std::cerr << "E_CONV: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
