#ifndef ALTXI_COMPLEX_OPS_HPP
#define ALTXI_COMPLEX_OPS_HPP

// Checked complex arithmetic and principal-branch powers of positive real
// bases. Every base that appears in this library (pi, the quartet constants,
// quadrature nodes) is a positive real, so x^a is always exp(a ln x) with the
// real logarithm and branch cuts never enter.

#include <cmath>
#include <limits>
#include <numbers>

#include "altxi/common.hpp"

namespace altxi {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kLn2 = std::numbers::ln2;
inline constexpr long double kPiL = std::numbers::pi_v<long double>;
inline constexpr long double kLn2L = std::numbers::ln2_v<long double>;

inline bool is_finite(Complex z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline Complex c_div(Complex a, Complex b) {
    if (b == Complex(0.0, 0.0))
        throw DomainError("complex division by zero");
    return a / b;
}

// Principal branch, imaginary part in (-pi, pi].
inline Complex c_log(Complex a) {
    if (a == Complex(0.0, 0.0))
        throw DomainError("complex log of zero");
    return std::log(a);
}

inline Complex real_pow_complex(double x, Complex a) {
    if (!(x > 0.0))
        throw DomainError("real_pow_complex: base must be a positive real");
    return std::exp(a * std::log(x));
}

namespace detail {

inline ComplexL real_pow_complex_l(long double x, ComplexL a) {
    return std::exp(a * std::log(x));
}

inline ComplexL widen(Complex z) {
    return ComplexL(z.real(), z.imag());
}

inline Complex narrow(ComplexL z) {
    return Complex(static_cast<double>(z.real()), static_cast<double>(z.imag()));
}

}  // namespace detail

}  // namespace altxi

#endif
