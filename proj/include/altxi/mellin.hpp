#ifndef ALTXI_MELLIN_HPP
#define ALTXI_MELLIN_HPP

// Brute-force quadrature of the integral representations of xi_a — the
// oracle the series methods are judged against.
//
// The symmetric form  xi_a(s) = int_1^inf varphi(x) (dx/x) [x^{s/2} +
// x^{(1-s)/2}]  is integrated in y = ln x: the kernel decays like
// e^{-pi x / 4}, so truncating at x ~ 60 leaves < 1e-20. The unit-interval
// form is integrated in u = -ln x, where the reflected kernel decays
// doubly-exponentially and kills both endpoints.

#include <cmath>

#include "altxi/common.hpp"
#include "altxi/complex_ops.hpp"
#include "altxi/quadrature.hpp"
#include "altxi/theta_kernel.hpp"

namespace altxi {
namespace detail {

inline double kernel_cutoff(double sigma) {
    return 60.0 + 8.0 * std::max(0.0, std::abs(sigma));
}

template <class F>
EvalResult refine(F&& eval, int points) {
    Complex full = eval(points);
    Complex half = eval(std::max(16, points / 2));
    return EvalResult{full, std::abs(full - half), points, Method::quadrature};
}

}  // namespace detail

inline EvalResult mellin_xi_a(SPoint p, const QuadratureSpec& spec = {},
                              const EvalSettings& st = {}) {
    validate(st);
    validate(spec);
    Complex s = p.s;
    double y_max = std::log(detail::kernel_cutoff(s.real()));
    auto integrand = [&](double y) -> Complex {
        double x = std::exp(y);
        return varphi(x, st) * (real_pow_complex(x, s / 2.0) +
                                real_pow_complex(x, (1.0 - s) / 2.0));
    };
    auto eval = [&](int n) {
        QuadratureSpec sp = spec;
        sp.points = n;
        return detail::integrate(integrand, 0.0, y_max, sp);
    };
    return detail::refine(eval, spec.points);
}

inline EvalResult mellin_xi_a_unit_interval(SPoint p, const QuadratureSpec& spec = {},
                                            const EvalSettings& st = {}) {
    validate(st);
    validate(spec);
    Complex s = p.s;
    if (!(s.real() > 0.0) || !(s.real() < 1.0))
        throw DomainError("mellin_xi_a_unit_interval: valid only for 0 < Re s < 1");
    // x = e^-u; varphi(e^-u) ~ e^{-pi e^u / 4} e^{u/2}
    double u_max = std::log(4.0 * detail::kernel_cutoff(s.real()) / kPi);
    auto integrand = [&](double u) -> Complex {
        double x = std::exp(-u);
        return varphi(x, st) * (real_pow_complex(x, s / 2.0) +
                                real_pow_complex(x, (1.0 - s) / 2.0));
    };
    auto eval = [&](int n) {
        QuadratureSpec sp = spec;
        sp.points = n;
        return detail::integrate(integrand, 0.0, u_max, sp);
    };
    return detail::refine(eval, spec.points);
}

// int_0^inf varphi(x) x^{c-1} dx for c in {0, 1/2, 1}, split at
// spec.split_at with the left part taken through u = -ln x.
inline EvalResult special_integral_component(double c, const QuadratureSpec& spec = {},
                                             const EvalSettings& st = {}) {
    validate(st);
    validate(spec);
    double x0 = spec.split_at;
    // a split point outside the decay window leaves that side's interval
    // empty rather than reversed
    double u_max = std::max(std::log(4.0 * detail::kernel_cutoff(c) / kPi), -std::log(x0));
    double y_max = std::max(std::log(detail::kernel_cutoff(c)), std::log(x0));
    auto left = [&](double u) -> Complex {
        double x = std::exp(-u);
        return Complex(varphi(x, st) * std::exp(-u * c), 0.0);
    };
    auto right = [&](double y) -> Complex {
        double x = std::exp(y);
        return Complex(varphi(x, st) * std::exp(y * c), 0.0);
    };
    auto eval = [&](int n) {
        QuadratureSpec sp = spec;
        sp.points = n;
        return detail::integrate(left, -std::log(x0), u_max, sp) +
               detail::integrate(right, std::log(x0), y_max, sp);
    };
    return detail::refine(eval, spec.points);
}

struct SpecialIntegrals {
    double over_x = 0.0;       // int varphi dx / x      (= -ln 2)
    double over_sqrt_x = 0.0;  // int varphi dx / sqrt x (= -ln 2)
    double plain = 0.0;        // int varphi dx          (= -pi / 4)
};

inline SpecialIntegrals special_integrals(const QuadratureSpec& spec = {},
                                          const EvalSettings& st = {}) {
    SpecialIntegrals out;
    out.over_x = special_integral_component(0.0, spec, st).value.real();
    out.over_sqrt_x = special_integral_component(0.5, spec, st).value.real();
    out.plain = special_integral_component(1.0, spec, st).value.real();
    return out;
}

}  // namespace altxi

#endif
