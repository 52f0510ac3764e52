#ifndef ALTXI_COMMON_HPP
#define ALTXI_COMMON_HPP

#include <complex>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace altxi {

using Complex = std::complex<double>;
using ComplexL = std::complex<long double>;

// Thrown when an input sits outside an operation's domain (poles, removable
// points, nonpositive arguments, ...). The message names the offending point.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

enum class Method {
    series,
    difference,
    continued_fraction,
    quadrature,
    quartet,
    reflection,
};

inline const char* to_string(Method m) {
    switch (m) {
        case Method::series: return "series";
        case Method::difference: return "difference";
        case Method::continued_fraction: return "continued_fraction";
        case Method::quadrature: return "quadrature";
        case Method::quartet: return "quartet";
        case Method::reflection: return "reflection";
    }
    return "unknown";
}

// Uniform return shape of every evaluator.
struct EvalResult {
    Complex value{0.0, 0.0};
    double est_error = 0.0;
    int terms_used = 0;
    Method method = Method::series;
};

// Thrown when a series/quadrature fails to converge within its budget.
// Carries the partial result so callers can still inspect it.
struct ConvergenceError : std::runtime_error {
    EvalResult partial;
    ConvergenceError(const std::string& msg, EvalResult p)
        : std::runtime_error(msg), partial(p) {}
};

struct EvalSettings {
    double rel_tol = 1e-14;   // relative truncation tolerance, in (0, 1e-3]
    int max_terms = 10000;    // series term budget
    int quad_points = 2000;   // default node count for quadrature oracles
};

inline void validate(const EvalSettings& st) {
    if (!(st.rel_tol > 0.0) || st.rel_tol > 1e-3)
        throw DomainError("EvalSettings: rel_tol must lie in (0, 1e-3]");
    if (st.max_terms < 1)
        throw DomainError("EvalSettings: max_terms must be >= 1");
    if (st.quad_points < 1)
        throw DomainError("EvalSettings: quad_points must be >= 1");
}

// Point of evaluation. When constructed through critical(), the shorthand
// records t with s = 1/2 + it and Re s is exactly one half.
struct SPoint {
    Complex s{0.0, 0.0};
    std::optional<double> critical_t;

    SPoint(Complex v) : s(v) {}                       // NOLINT(google-explicit-constructor)
    SPoint(double re, double im) : s(re, im) {}
    SPoint(double re) : s(re, 0.0) {}                 // NOLINT(google-explicit-constructor)

    static SPoint critical(double t) {
        SPoint p(Complex(0.5, t));
        p.critical_t = t;
        return p;
    }
};

// One row of a critical-line scan.
struct ScanRecord {
    double t = 0.0;
    double xi_a = 0.0;
    int sign = 0;   // signum with a zero band at |xi_a| < 1e-15
};

}  // namespace altxi

#endif
