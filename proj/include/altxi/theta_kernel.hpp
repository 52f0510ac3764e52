#ifndef ALTXI_THETA_KERNEL_HPP
#define ALTXI_THETA_KERNEL_HPP

// Real-valued kernels: the alternating Gaussian sum phi(x), the grouped
// kernel varphi(x) = phi(x) - phi(x/4) with its reflection law
// varphi(1/x) = varphi(x) sqrt(x), and the three classical theta series on
// the imaginary axis.

#include <cmath>
#include <limits>
#include <tuple>

#include "altxi/common.hpp"
#include "altxi/complex_ops.hpp"

namespace altxi {

// A_m = pi (4m+1)^2 / 4, B_m = pi (4m+2)^2 / 4, C_m = pi (4m+3)^2 / 4.
struct QuartetCoefficients {
    int m = 0;
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;
};

inline QuartetCoefficients quartet_coefficients(int m) {
    if (m < 0) throw DomainError("quartet_coefficients: m must be >= 0");
    auto sq = [](double v) { return v * v; };
    return QuartetCoefficients{m, kPi * sq(4.0 * m + 1.0) / 4.0,
                               kPi * sq(4.0 * m + 2.0) / 4.0,
                               kPi * sq(4.0 * m + 3.0) / 4.0};
}

namespace detail {

inline void require_positive_x(double x, const char* who) {
    if (!(x > 0.0)) throw DomainError(std::string(who) + ": x must be > 0");
}

}  // namespace detail

// phi(x) = sum_{n>=1} (-1)^{n+1} e^{-pi n^2 x}
inline double phi_series(double x, const EvalSettings& st = {}) {
    detail::require_positive_x(x, "phi_series");
    validate(st);
    double sum = 0.0;
    double sign = 1.0;
    for (int n = 1; n <= st.max_terms; ++n) {
        double term = std::exp(-kPi * static_cast<double>(n) * n * x);
        sum += sign * term;
        sign = -sign;
        double next = std::exp(-kPi * static_cast<double>(n + 1) * (n + 1) * x);
        if (next < st.rel_tol * std::max(std::abs(sum), 1e-300)) return sum;
    }
    throw ConvergenceError("phi_series: did not converge within max_terms",
                           EvalResult{Complex(sum, 0.0), 0.0, st.max_terms,
                                      Method::series});
}

// T_m(x) = -e^{-A_m x} + 2 e^{-B_m x} - e^{-C_m x}
inline double quartet_term(int m, double x) {
    detail::require_positive_x(x, "quartet_term");
    auto q = quartet_coefficients(m);
    return -std::exp(-q.a * x) + 2.0 * std::exp(-q.b * x) - std::exp(-q.c * x);
}

// Direct quartet summation of varphi, usable at any x > 0 but efficient
// only for x not too small (it needs O(1/sqrt(x)) groups as x -> 0).
inline double varphi_direct(double x, const EvalSettings& st = {}) {
    detail::require_positive_x(x, "varphi_direct");
    validate(st);
    double sum = 0.0;
    for (int m = 0; m <= st.max_terms; ++m) {
        double term = quartet_term(m, x);
        sum += term;
        if (std::abs(term) < st.rel_tol * std::max(std::abs(sum), 1e-300)) return sum;
    }
    throw ConvergenceError("varphi_direct: did not converge within max_terms",
                           EvalResult{Complex(sum, 0.0), 0.0, st.max_terms,
                                      Method::series});
}

// varphi(x), strictly negative for all x > 0. For x < 1 the reflection law
// is exact and keeps the sum in its fast regime: varphi(x) =
// varphi(1/x) sqrt(1/x). Beyond x ~ 947 the value drops below the double
// denormal range; the sign contract is kept by clamping to the smallest
// negative double instead of returning a signless zero.
inline double varphi(double x, const EvalSettings& st = {}) {
    detail::require_positive_x(x, "varphi");
    double v;
    if (x < 1.0) {
        double inv = 1.0 / x;
        v = varphi_direct(inv, st) * std::sqrt(inv);
    } else {
        v = varphi_direct(x, st);
    }
    if (!(v < 0.0)) v = -std::numeric_limits<double>::denorm_min();
    return v;
}

struct ThetaTrio {
    double theta = 0.0;       // sum_{n in Z} e^{-pi n^2 x}
    double theta_alt = 0.0;   // sum_{n in Z} (-1)^n e^{-pi n^2 x}
    double theta_half = 0.0;  // 2 sum_{n>=0} e^{-pi (n+1/2)^2 x}
};

inline ThetaTrio theta_trio(double x, const EvalSettings& st = {}) {
    detail::require_positive_x(x, "theta_trio");
    validate(st);
    ThetaTrio out;
    out.theta = 1.0;
    out.theta_alt = 1.0;
    for (int n = 1; n <= st.max_terms; ++n) {
        double term = 2.0 * std::exp(-kPi * static_cast<double>(n) * n * x);
        out.theta += term;
        out.theta_alt += (n % 2 == 0) ? term : -term;
        if (term < st.rel_tol * std::max(out.theta, 1e-300)) break;
    }
    for (int n = 0; n <= st.max_terms; ++n) {
        double h = n + 0.5;
        double term = 2.0 * std::exp(-kPi * h * h * x);
        out.theta_half += term;
        if (term < st.rel_tol * std::max(out.theta_half, 1e-300)) break;
    }
    return out;
}

// Central finite difference; the kernel has no analytic derivative exposed.
inline double varphi_derivative(double x, double h, const EvalSettings& st = {}) {
    detail::require_positive_x(x, "varphi_derivative");
    if (!(h > 0.0) || h >= x / 2.0)
        throw DomainError("varphi_derivative: need 0 < h < x/2");
    return (varphi(x + h, st) - varphi(x - h, st)) / (2.0 * h);
}

}  // namespace altxi

#endif
