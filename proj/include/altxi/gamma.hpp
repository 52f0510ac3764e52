#ifndef ALTXI_GAMMA_HPP
#define ALTXI_GAMMA_HPP

// Complete gamma function for complex argument via a fixed-coefficient
// Lanczos rational approximation (g = 607/128, 15 terms), with the
// reflection formula for Re z < 1/2. Internals run in long double so the
// incomplete-gamma difference method downstream keeps full double accuracy.

#include <cmath>
#include <sstream>

#include "altxi/common.hpp"
#include "altxi/complex_ops.hpp"

namespace altxi {
namespace detail {

inline constexpr long double kLanczosG = 607.0L / 128.0L;

inline constexpr long double kLanczosC[15] = {
    0.99999999999999709182L,
    57.156235665862923517L,
    -59.597960355475491248L,
    14.136097974741747174L,
    -0.49191381609762019978L,
    0.33994649984811888699e-4L,
    0.46523628927048575665e-4L,
    -0.98374475304879564677e-4L,
    0.15808870322491248884e-3L,
    -0.21026444172410488319e-3L,
    0.21743961811521264320e-3L,
    -0.16431810653676389022e-3L,
    0.84418223983852743293e-4L,
    -0.26190838401581408670e-4L,
    0.36899182659531622704e-5L,
};

inline ComplexL gamma_l(ComplexL z) {
    if (z.real() < 0.5L) {
        // Gamma(z) Gamma(1-z) = pi / sin(pi z)
        return kPiL / (std::sin(kPiL * z) * gamma_l(1.0L - z));
    }
    ComplexL w = z - 1.0L;
    ComplexL acc = kLanczosC[0];
    for (int k = 1; k < 15; ++k)
        acc += kLanczosC[k] / (w + static_cast<long double>(k));
    ComplexL t = w + kLanczosG + 0.5L;
    const long double sqrt_two_pi = 2.50662827463100050241576528481104525L;
    return sqrt_two_pi * std::exp((w + 0.5L) * std::log(t) - t) * acc;
}

// Index of the nearest pole 0, -1, -2, ... or -1 if z is not within
// `radius` of any of them.
inline int nearest_gamma_pole(Complex z, double radius) {
    double k = std::round(-z.real());
    if (k < 0.0) return -1;
    Complex pole(-k, 0.0);
    if (std::abs(z - pole) < radius) return static_cast<int>(k);
    return -1;
}

}  // namespace detail

inline Complex gamma(Complex z) {
    int pole = detail::nearest_gamma_pole(z, 1e-9);
    if (pole >= 0) {
        std::ostringstream msg;
        msg << "gamma: argument within 1e-9 of the pole at z = " << -pole;
        throw DomainError(msg.str());
    }
    return detail::narrow(detail::gamma_l(detail::widen(z)));
}

}  // namespace altxi

#endif
