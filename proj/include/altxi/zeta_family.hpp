#ifndef ALTXI_ZETA_FAMILY_HPP
#define ALTXI_ZETA_FAMILY_HPP

// The user-facing analytic functions: eta(s), zeta(s), the alternating Xi
// function xi_a(s) by three independent routes, the xi(s)/eta(s) conversions
// and the critical-line scan.
//
// eta is evaluated from the quartet identity
//   eta(s) (1 - 2^-s) = sum_m [(4m+1)^-s - 2(4m+2)^-s + (4m+3)^-s]
// whose terms are a second difference, O(m^{-Re s - 2}), absolutely
// convergent for Re s > -1. The m-tail is closed with Euler-Maclaurin
// corrections so the sum converges at full accuracy inside the term budget.

#include <algorithm>
#include <cmath>
#include <sstream>
#include <vector>

#include "altxi/common.hpp"
#include "altxi/complex_ops.hpp"
#include "altxi/gamma.hpp"
#include "altxi/incomplete_gamma.hpp"
#include "altxi/theta_kernel.hpp"

namespace altxi {
namespace detail {

// D(q) = (4M+1)^-q - 2(4M+2)^-q + (4M+3)^-q
inline Complex quartet_delta2(double base4m, Complex q) {
    return real_pow_complex(base4m + 1.0, -q) - 2.0 * real_pow_complex(base4m + 2.0, -q) +
           real_pow_complex(base4m + 3.0, -q);
}

inline Complex quartet_bracket(Complex s, int m) {
    return quartet_delta2(4.0 * m, s);
}

// Euler-Maclaurin closure of sum_{m >= M} of the quartet brackets:
//   integral + T(M)/2 - T'(M)/12 + T'''(M)/720 - T5(M)/30240.
// |last_term| is returned as the remainder proxy (the next order is smaller
// by ((|s|+7)/4M)^2 once 4M exceeds |s|).
inline Complex quartet_em_tail(Complex s, int M, double* last_term_mag) {
    const double v = 4.0 * M;
    Complex integral;
    if (std::abs(s - Complex(1.0, 0.0)) < 1e-6) {
        // antiderivative degenerates to logs at s = 1
        double l1 = std::log(v + 1.0), l2 = std::log(v + 2.0), l3 = std::log(v + 3.0);
        double d1 = l1 - 2.0 * l2 + l3;
        double d2 = l1 * l1 - 2.0 * l2 * l2 + l3 * l3;
        double d3 = l1 * l1 * l1 - 2.0 * l2 * l2 * l2 + l3 * l3 * l3;
        Complex eps = s - 1.0;
        integral = -d1 / 4.0 + eps * (d2 / 8.0) - eps * eps * (d3 / 24.0);
    } else {
        integral = quartet_delta2(v, s - 1.0) / (4.0 * (s - 1.0));
    }
    Complex t0 = quartet_delta2(v, s);
    Complex t1 = quartet_delta2(v, s + 1.0);
    Complex t3 = quartet_delta2(v, s + 3.0);
    Complex t5 = quartet_delta2(v, s + 5.0);
    Complex p3 = s * (s + 1.0) * (s + 2.0);
    Complex p5 = p3 * (s + 3.0) * (s + 4.0);
    Complex last = (1024.0 / 30240.0) * p5 * t5;
    if (last_term_mag) *last_term_mag = std::abs(last);
    return integral + 0.5 * t0 + (s / 3.0) * t1 - (64.0 / 720.0) * p3 * t3 + last;
}

struct QuartetSum {
    Complex sum{0.0, 0.0};
    double est_error = 0.0;
    int terms_used = 0;
};

// sum_{m=0}^inf of the quartet brackets, explicit head + EM tail, with the
// head doubled until the tail's last correction is inside tolerance.
inline QuartetSum quartet_dirichlet_sum(Complex s, const EvalSettings& st) {
    int M = 32;
    if (std::abs(s) > 16.0) M = static_cast<int>(std::ceil(std::abs(s))) * 2;
    M = std::max(1, std::min(M, (st.max_terms - 15) / 3));
    Complex head{0.0, 0.0};
    double scale = 0.0;  // sum of |brackets|: the sum itself vanishes at the
                         // eta zeros, where a purely relative target is unmeetable
    int m_done = 0;
    for (;;) {
        for (; m_done < M; ++m_done) {
            Complex b = quartet_bracket(s, m_done);
            head += b;
            scale += std::abs(b);
        }
        double last = 0.0;
        Complex tail = quartet_em_tail(s, M, &last);
        Complex total = head + tail;
        double target =
            0.25 * st.rel_tol * std::max({std::abs(total), scale, 1e-300});
        if (last <= target)
            return QuartetSum{total, last + 1e-16 * scale, 3 * M + 15};
        if (3 * (2 * M) + 15 > st.max_terms) {
            EvalResult partial{total, last, 3 * M + 15, Method::quartet};
            throw ConvergenceError(
                "quartet sum: Euler-Maclaurin tail not converged within max_terms",
                partial);
        }
        M *= 2;
    }
}

// sum_{m >= m0} of the quartet brackets.
inline Complex quartet_tail_from(Complex s, int m0, const EvalSettings& st) {
    Complex head{0.0, 0.0};
    for (int m = 0; m < m0; ++m) head += quartet_bracket(s, m);
    return quartet_dirichlet_sum(s, st).sum - head;
}

// Direct alternating sum with Euler-transform acceleration: the first N terms
// are summed as printed, then M further partial sums are repeatedly averaged.
// Globally convergent, used as the independent oracle and as the fallback
// where 1 - 2^-s vanishes.
inline EvalResult eta_euler(Complex s, const EvalSettings& st) {
    double tmag = std::abs(s.imag());
    int N = 12 + 2 * static_cast<int>(std::ceil(tmag));
    int M = 48 + static_cast<int>(std::ceil(tmag));
    if (N + M + 1 > st.max_terms) {
        M = st.max_terms - N - 1;
        if (M < 8)
            throw ConvergenceError("eta: max_terms too small for Euler acceleration",
                                   EvalResult{});
    }
    Complex partial{0.0, 0.0};
    double sign = 1.0;
    for (int n = 1; n <= N; ++n) {
        partial += sign * real_pow_complex(static_cast<double>(n), -s);
        sign = -sign;
    }
    std::vector<Complex> row(static_cast<size_t>(M) + 1);
    for (int j = 0; j <= M; ++j) {
        if (j > 0) {
            partial += sign * real_pow_complex(static_cast<double>(N + j), -s);
            sign = -sign;
        }
        row[static_cast<size_t>(j)] = partial;
    }
    Complex prev = row[0];
    for (int k = 1; k <= M; ++k) {
        if (k == M) prev = row[0];
        for (int j = 0; j <= M - k; ++j)
            row[static_cast<size_t>(j)] =
                0.5 * (row[static_cast<size_t>(j)] + row[static_cast<size_t>(j + 1)]);
    }
    return EvalResult{row[0], std::abs(row[0] - prev), N + M + 1, Method::series};
}

inline bool near_point(Complex s, Complex p, double radius) {
    return std::abs(s - p) < radius;
}

// nearest lattice point offset + 2 k pi i / ln 2
inline Complex nearest_ln2_lattice(Complex s, double offset) {
    double k = std::round(s.imag() * kLn2 / (2.0 * kPi));
    return Complex(offset, 2.0 * k * kPi / kLn2);
}

}  // namespace detail

inline EvalResult eta(SPoint p, const EvalSettings& st = {});

// Independent oracle path: plain alternating sum, Euler-accelerated.
inline EvalResult eta_alternating(SPoint p, const EvalSettings& st = {}) {
    validate(st);
    return detail::eta_euler(p.s, st);
}

inline EvalResult eta(SPoint p, const EvalSettings& st) {
    validate(st);
    Complex s = p.s;
    if (s.real() < 0.0) {
        // functional equation back into the convergent half-plane
        EvalResult mirror = eta(Complex(1.0, 0.0) - s, st);
        Complex two_s = real_pow_complex(2.0, s);
        Complex pref = (two_s - 2.0) / (1.0 - two_s) *
                       real_pow_complex(kPi, s - 1.0) * gamma(1.0 - s) *
                       std::sin(kPi * s / 2.0);
        Complex value = pref * mirror.value;
        return EvalResult{value,
                          std::abs(pref) * mirror.est_error + 1e-15 * std::abs(value),
                          mirror.terms_used, Method::reflection};
    }
    Complex denom = 1.0 - real_pow_complex(2.0, -s);
    if (std::abs(denom) < 1e-3) {
        // 1 - 2^-s vanishes on s = 2 k pi i / ln 2; the quartet form is 0/0
        // there while the accelerated alternating sum stays regular.
        return detail::eta_euler(s, st);
    }
    auto q = detail::quartet_dirichlet_sum(s, st);
    Complex value = q.sum / denom;
    return EvalResult{value, (q.est_error + 1e-16 * std::abs(q.sum)) / std::abs(denom),
                      q.terms_used, Method::quartet};
}

inline EvalResult zeta(SPoint p, const EvalSettings& st = {}) {
    validate(st);
    Complex s = p.s;
    if (detail::near_point(s, Complex(1.0, 0.0), 1e-8))
        throw DomainError("zeta: s within 1e-8 of the pole at s = 1");
    Complex removable = detail::nearest_ln2_lattice(s, 1.0);
    if (removable.imag() != 0.0 && detail::near_point(s, removable, 1e-8))
        throw DomainError("zeta: s within 1e-8 of the removable point 1 + 2n pi i / ln 2");
    EvalResult e = eta(p, st);
    Complex denom = 1.0 - real_pow_complex(2.0, 1.0 - s);
    Complex value = e.value / denom;
    return EvalResult{value, e.est_error / std::abs(denom) + 1e-15 * std::abs(value),
                      e.terms_used, e.method};
}

// Exact location of the extra zeros of eta: s = 1 +- 2 n pi i / ln 2.
inline Complex eta_extra_zero(int n, int sign) {
    if (n < 1) throw DomainError("eta_extra_zero: n must be >= 1");
    if (sign != +1 && sign != -1) throw DomainError("eta_extra_zero: sign must be +-1");
    return Complex(1.0, sign * 2.0 * n * kPi / kLn2);
}

// xi_a(s) = (1 - 2^s) pi^{-s/2} Gamma(s/2) eta(s), evaluated literally.
// The removable singularities along 0, -2, -4, ... are refused; they are
// served by xi_a_gamma_series, which stays finite there.
inline EvalResult xi_a_direct(SPoint p, const EvalSettings& st = {}) {
    validate(st);
    Complex s = p.s;
    double k = std::round(-s.real() / 2.0);
    if (k >= 0.0 && detail::near_point(s, Complex(-2.0 * k, 0.0), 1e-6)) {
        std::ostringstream msg;
        msg << "xi_a_direct: s within 1e-6 of the removable point s = " << -2.0 * k
            << "; use xi_a_gamma_series there";
        throw DomainError(msg.str());
    }
    EvalResult e = eta(p, st);
    Complex pref = (1.0 - real_pow_complex(2.0, s)) * real_pow_complex(kPi, -s / 2.0) *
                   gamma(s / 2.0);
    Complex value = pref * e.value;
    return EvalResult{value, std::abs(pref) * e.est_error + 1e-15 * std::abs(value),
                      e.terms_used, e.method};
}

namespace detail {

// One half-bracket of the upper-incomplete-gamma expansion:
//   -Gamma(w,A_m)/A_m^w + 2 Gamma(w,B_m)/B_m^w - Gamma(w,C_m)/C_m^w
// in long double.
inline ComplexL xi_a_upper_half_bracket(ComplexL w, int m, const EvalSettings& st,
                                        long double* est_acc) {
    const long double k1 = 4.0L * m + 1.0L, k2 = 4.0L * m + 2.0L, k3 = 4.0L * m + 3.0L;
    const long double A = kPiL * k1 * k1 / 4.0L;
    const long double B = kPiL * k2 * k2 / 4.0L;
    const long double C = kPiL * k3 * k3 / 4.0L;
    ComplexL acc{0.0L, 0.0L};
    const long double zs[3] = {A, B, C};
    const long double coef[3] = {-1.0L, 2.0L, -1.0L};
    for (int i = 0; i < 3; ++i) {
        auto u = upper_l(w, zs[i], st.rel_tol, st.max_terms);
        acc += coef[i] * u.value / real_pow_complex_l(zs[i], w);
        if (est_acc) *est_acc += u.est_error;
    }
    return acc;
}

}  // namespace detail

// The six-term upper-incomplete-gamma expansion of xi_a(s), valid in the
// whole plane (brackets decay like e^{-A_m}); finite at the Gamma(s/2) poles.
inline EvalResult xi_a_gamma_series(SPoint p, const EvalSettings& st = {}) {
    validate(st);
    ComplexL s = detail::widen(p.s);
    ComplexL w = s / 2.0L;
    ComplexL wbar = (1.0L - s) / 2.0L;
    ComplexL acc{0.0L, 0.0L};
    long double est = 0.0L;
    double scale = 0.0;  // |brackets| accumulate; acc alone vanishes at zeros
    double last = 0.0;
    int m = 0;
    for (; m < 64; ++m) {
        ComplexL bracket = detail::xi_a_upper_half_bracket(w, m, st, &est) +
                           detail::xi_a_upper_half_bracket(wbar, m, st, &est);
        acc += bracket;
        last = static_cast<double>(std::abs(bracket));
        scale += last;
        if (m >= 1 &&
            last < st.rel_tol *
                       std::max({static_cast<double>(std::abs(acc)), scale, 1e-300}))
            break;
    }
    Complex value = detail::narrow(acc);
    return EvalResult{value, last + static_cast<double>(est), m + 1, Method::series};
}

// alpha_m, beta_m, gamma_m of the critical-line form:
// 2 Re[Gamma(w, X_m) / X_m^w] for X = A, B, C and w = 1/4 + i t / 2.
struct CriticalTerms {
    double alpha = 0.0;
    double beta = 0.0;
    double gamma = 0.0;
};

inline CriticalTerms critical_line_terms(double t, int m, const EvalSettings& st = {}) {
    validate(st);
    if (m < 0) throw DomainError("critical_line_terms: m must be >= 0");
    ComplexL w(0.25L, static_cast<long double>(t) / 2.0L);
    const long double k1 = 4.0L * m + 1.0L, k2 = 4.0L * m + 2.0L, k3 = 4.0L * m + 3.0L;
    const long double zs[3] = {kPiL * k1 * k1 / 4.0L, kPiL * k2 * k2 / 4.0L,
                               kPiL * k3 * k3 / 4.0L};
    double out[3];
    for (int i = 0; i < 3; ++i) {
        auto u = detail::upper_l(w, zs[i], st.rel_tol, st.max_terms);
        out[i] = static_cast<double>(2.0L * (u.value / detail::real_pow_complex_l(zs[i], w)).real());
    }
    return CriticalTerms{out[0], out[1], out[2]};
}

// xi_a(1/2 + it) = 2 Re sum_m [-Gamma(w,A_m)/A_m^w + 2 Gamma(w,B_m)/B_m^w
//                              - Gamma(w,C_m)/C_m^w], real by construction.
inline EvalResult xi_a_critical(double t, const EvalSettings& st = {}) {
    validate(st);
    ComplexL w(0.25L, static_cast<long double>(t) / 2.0L);
    long double acc = 0.0L;
    long double est = 0.0L;
    double scale = 0.0;  // the sum itself vanishes at every nontrivial zero
    double last = 0.0;
    int m = 0;
    for (; m < 64; ++m) {
        long double bracket =
            2.0L * detail::xi_a_upper_half_bracket(w, m, st, &est).real();
        acc += bracket;
        last = static_cast<double>(std::abs(bracket));
        scale += last;
        if (m >= 1 &&
            last < st.rel_tol *
                       std::max({static_cast<double>(std::abs(acc)), scale, 1e-300}))
            break;
    }
    return EvalResult{Complex(static_cast<double>(acc), 0.0),
                      last + static_cast<double>(est), m + 1, Method::series};
}

// The lower-incomplete-gamma expansion, convergent in the critical strip.
// Brackets with all three arguments beyond z = 60 have gamma(w, z) equal to
// Gamma(w) to below 1e-26, which turns the remaining m-sum into the quartet
// Dirichlet tail; that tail is closed with the same Euler-Maclaurin
// machinery eta uses. A literal term-by-term truncation converges only like
// m^{-Re s - 2} and cannot reach even 1e-6 in a sane term budget.
inline EvalResult xi_a_lower_series(SPoint p, const EvalSettings& st = {}) {
    validate(st);
    Complex s = p.s;
    if (!(s.real() > 0.0) || !(s.real() < 1.0))
        throw DomainError("xi_a_lower_series: valid only for 0 < Re s < 1");
    ComplexL sl = detail::widen(s);
    ComplexL w = sl / 2.0L;
    ComplexL wbar = (1.0L - sl) / 2.0L;
    ComplexL gw = detail::gamma_l(w);
    ComplexL gwbar = detail::gamma_l(wbar);
    const int lead = 8;  // brackets evaluated with true lower gammas
    ComplexL acc{0.0L, 0.0L};
    long double est = 0.0L;
    for (int m = 0; m < lead; ++m) {
        const long double ks[3] = {4.0L * m + 1.0L, 4.0L * m + 2.0L, 4.0L * m + 3.0L};
        const long double coef[3] = {-1.0L, 2.0L, -1.0L};
        for (const ComplexL& ww : {w, wbar}) {
            ComplexL g = (ww == w) ? gw : gwbar;
            for (int i = 0; i < 3; ++i) {
                long double z = kPiL * ks[i] * ks[i] / 4.0L;
                ComplexL low;
                if (z <= 60.0L) {
                    auto r = detail::lower_series_l(ww, z, st.rel_tol, st.max_terms);
                    low = r.value;
                    est += r.est_error;
                } else {
                    low = g;  // upper tail below e^-60
                }
                acc += coef[i] * low / detail::real_pow_complex_l(z, ww);
            }
        }
    }
    // remaining m >= lead: gamma(w, .) == Gamma(w), brackets collapse onto
    // -Gamma(w) (pi/4)^-w (4m+k)^-s pattern
    Complex tail_s = detail::quartet_tail_from(s, lead, st);
    Complex tail_1ms = detail::quartet_tail_from(1.0 - s, lead, st);
    Complex pref_w = detail::narrow(gw * detail::real_pow_complex_l(kPiL / 4.0L, -w));
    Complex pref_wbar = detail::narrow(gwbar * detail::real_pow_complex_l(kPiL / 4.0L, -wbar));
    Complex value = detail::narrow(acc) - pref_w * tail_s - pref_wbar * tail_1ms;
    double est_d = static_cast<double>(est) + 1e-15 * std::abs(value);
    return EvalResult{value, est_d, lead, Method::series};
}

// xi(s) = s (s-1) xi_a(s) / (2 (1 - 2^s)(1 - 2^{1-s}))
inline Complex xi_from_xi_a(SPoint p, Complex xi_a_value) {
    Complex s = p.s;
    Complex z0 = detail::nearest_ln2_lattice(s, 0.0);
    Complex z1 = detail::nearest_ln2_lattice(s, 1.0);
    if (detail::near_point(s, z0, 1e-8) || detail::near_point(s, z1, 1e-8))
        throw DomainError(
            "xi_from_xi_a: s within 1e-8 of a zero of (1-2^s)(1-2^{1-s})");
    Complex denom = 2.0 * (1.0 - real_pow_complex(2.0, s)) *
                    (1.0 - real_pow_complex(2.0, 1.0 - s));
    return s * (s - 1.0) * xi_a_value / denom;
}

// eta(s) = xi_a(s) pi^{s/2} / ((1 - 2^s) Gamma(s/2)), the inverse of the
// defining product.
inline Complex eta_from_xi_a(SPoint p, Complex xi_a_value) {
    Complex s = p.s;
    Complex z0 = detail::nearest_ln2_lattice(s, 0.0);
    if (detail::near_point(s, z0, 1e-8))
        throw DomainError("eta_from_xi_a: s within 1e-8 of a zero of (1-2^s)");
    double k = std::round(-s.real() / 2.0);
    if (k >= 0.0 && detail::near_point(s, Complex(-2.0 * k, 0.0), 1e-8))
        throw DomainError("eta_from_xi_a: s within 1e-8 of a pole of Gamma(s/2)");
    return xi_a_value * real_pow_complex(kPi, s / 2.0) /
           ((1.0 - real_pow_complex(2.0, s)) * gamma(s / 2.0));
}

// Relative residual of the eta functional equation
//   eta(s) = (2^s - 2)/(1 - 2^s) pi^{s-1} Gamma(1-s) sin(pi s / 2) eta(1-s)
// with both sides evaluated through convergent quartet sums.
inline double eta_functional_residual(SPoint p, const EvalSettings& st = {}) {
    validate(st);
    Complex s = p.s;
    Complex z0 = detail::nearest_ln2_lattice(s, 0.0);
    if (detail::near_point(s, z0, 1e-8))
        throw DomainError("eta_functional_residual: s within 1e-8 of a zero of (1-2^s)");
    double n = std::round(s.real());
    if (n >= 1.0 && detail::near_point(s, Complex(n, 0.0), 1e-8))
        throw DomainError(
            "eta_functional_residual: s within 1e-8 of a pole of Gamma(1-s)");
    Complex lhs = eta(s, st).value;
    Complex two_s = real_pow_complex(2.0, s);
    Complex rhs = (two_s - 2.0) / (1.0 - two_s) * real_pow_complex(kPi, s - 1.0) *
                  gamma(1.0 - s) * std::sin(kPi * s / 2.0) *
                  eta(Complex(1.0, 0.0) - s, st).value;
    return std::abs(lhs - rhs) / std::max({std::abs(lhs), std::abs(rhs), 1e-300});
}

struct ScanResult {
    std::vector<ScanRecord> records;
    std::vector<double> zeros;  // refined to |interval| < 1e-9
};

namespace detail {

inline int sign_band(double v) {
    if (std::abs(v) < 1e-15) return 0;
    return v > 0.0 ? +1 : -1;
}

inline double bisect_critical(double a, double b, double fa, const EvalSettings& st) {
    while (b - a > 1e-9) {
        double mid = 0.5 * (a + b);
        double fm = xi_a_critical(mid, st).value.real();
        if (sign_band(fm) == 0) return mid;
        if ((fm > 0.0) == (fa > 0.0)) {
            a = mid;
            fa = fm;
        } else {
            b = mid;
        }
    }
    return 0.5 * (a + b);
}

}  // namespace detail

// Evaluates xi_a(1/2 + it) on the grid, records signs, and refines each
// bracketed sign change by bisection. Records are in ascending t.
inline ScanResult scan_critical_line(double t_min, double t_max, double step,
                                     const EvalSettings& st = {}) {
    validate(st);
    if (!(step > 0.0)) throw DomainError("scan_critical_line: step must be > 0");
    if (t_min > t_max) throw DomainError("scan_critical_line: t_min must be <= t_max");
    ScanResult out;
    int n = static_cast<int>(std::floor((t_max - t_min) / step + 1e-9)) + 1;
    for (int k = 0; k < n; ++k) {
        double t = t_min + k * step;
        double v = xi_a_critical(t, st).value.real();
        out.records.push_back(ScanRecord{t, v, detail::sign_band(v)});
    }
    for (size_t i = 0; i + 1 < out.records.size(); ++i) {
        const auto& r1 = out.records[i];
        const auto& r2 = out.records[i + 1];
        if (r1.sign != 0 && r2.sign != 0 && r1.sign != r2.sign)
            out.zeros.push_back(detail::bisect_critical(r1.t, r2.t, r1.xi_a, st));
        else if (r2.sign == 0)
            out.zeros.push_back(r2.t);
    }
    if (!out.records.empty() && out.records.front().sign == 0)
        out.zeros.insert(out.zeros.begin(), out.records.front().t);
    return out;
}

}  // namespace altxi

#endif
