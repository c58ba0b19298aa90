#include "xic/zeta.hpp"

#include <cmath>

#include "xic/bernoulli.hpp"
#include "xic/constants.hpp"
#include "xic/gamma.hpp"

namespace xic {

namespace {

constexpr int kMaxTailTerms = 14;
constexpr double kEps = 2.2e-16;

int em_direct_terms(const Complex& s) {
    return std::max(50, static_cast<int>(1.3 * std::fabs(s.imag())) + 1);
}

struct EmParts {
    Complex direct;   // sum_{n=1}^{N-1} n^{-s}
    Complex half;     // N^{-s} / 2
    Complex tail;     // Bernoulli corrections at N
    double n;         // N
};

EmParts zeta_em_parts(const Complex& s) {
    const int N = em_direct_terms(s);
    EmParts p;
    p.n = N;
    p.direct = Complex{0.0, 0.0};
    for (int n = 1; n < N; ++n) p.direct += pow_rc(n, -s);
    p.half = 0.5 * pow_rc(N, -s);
    p.tail = detail::hurwitz_bernoulli_tail(s, N);
    return p;
}

} // namespace

namespace detail {

double hurwitz_shift_target(const Complex& z) {
    return std::max(12.0, 1.3 * std::fabs(z.imag()));
}

Complex hurwitz_bernoulli_tail(const Complex& z, double A, double* err) {
    Complex acc{0.0, 0.0};
    Complex pochv = z;                       // (z)_{2j-1}, built incrementally
    Complex apow = pow_rc(A, -z - 1.0);      // A^{-z-2j+1}
    const double a2 = A * A;
    double prev = 1e308;
    double last = 0.0;
    for (int j = 1; j <= kMaxTailTerms; ++j) {
        const Complex term = bernoulli_over_factorial(2 * j) * pochv * apow;
        const double mag = std::abs(term);
        if (mag > prev) { last = mag; break; } // asymptotic regime: stop before growth
        acc += term;
        prev = mag;
        last = mag;
        if (mag < kEps * std::abs(acc) + 1e-300) { last = mag; break; }
        pochv *= (z + (2.0 * j - 1.0)) * (z + 2.0 * j);
        apow /= a2;
    }
    if (err) *err = last;
    return acc;
}

} // namespace detail

Complex zeta_one_product(const Complex& s) {
    if (s.real() >= 0.5) {
        const EmParts p = zeta_em_parts(s);
        return ensure_finite((s - 1.0) * (p.direct + p.half + p.tail) + pow_rc(p.n, 1.0 - s),
                             "zeta_one_product");
    }
    return (s - 1.0) * riemann_zeta(s);
}

Complex riemann_zeta(const Complex& s) {
    if (s == Complex{1.0, 0.0}) throw PoleError("riemann_zeta: pole at s = 1");
    if (s.real() >= 0.5) {
        const EmParts p = zeta_em_parts(s);
        return ensure_finite(p.direct + pow_rc(p.n, 1.0 - s) / (s - 1.0) + p.half + p.tail,
                             "riemann_zeta");
    }
    const Complex w = 1.0 - s;
    if (std::fabs(s.imag()) <= 40.0) {
        // sin(pi s/2) zeta(1-s) written as -(pi/2) sinc(pi s/2) * (w-1) zeta(w)
        // so the s = 0 point (sin zero against the zeta pole) stays finite.
        const Complex sin_part = -(kPi / 2.0) * sinc(kPi * s / 2.0) * zeta_one_product(w);
        const Complex v = pow_rc(2.0, s) * pow_rc(kPi, s - 1.0) * gamma(w) * sin_part;
        return ensure_finite(v, "riemann_zeta");
    }
    // far from the real axis the factors over/underflow individually; combine in logs
    const Complex lg = s * std::log(2.0) + (s - 1.0) * std::log(kPi) + log_gamma(w) +
                       log_sin_pi(s / 2.0);
    return ensure_finite(std::exp(lg) * riemann_zeta(w), "riemann_zeta");
}

double zeta_deriv_zero() { return -0.5 * kLog2Pi; }

Complex hurwitz_zeta(const Complex& z, double a) {
    if (z == Complex{1.0, 0.0}) throw PoleError("hurwitz_zeta: pole at z = 1");
    if (!(a > 0.0)) throw DomainError("hurwitz_zeta: requires a > 0");
    if (!(z.real() > -1.0)) throw DomainError("hurwitz_zeta: supported region is Re z > -1");
    const double target = detail::hurwitz_shift_target(z);
    const int N = a >= target ? 0 : static_cast<int>(std::ceil(target - a));
    const double A = a + N;
    Complex direct{0.0, 0.0};
    for (int n = 0; n < N; ++n) direct += pow_rc(a + n, -z);
    const Complex v = direct + pow_rc(A, 1.0 - z) / (z - 1.0) + 0.5 * pow_rc(A, -z) +
                      detail::hurwitz_bernoulli_tail(z, A);
    return ensure_finite(v, "hurwitz_zeta");
}

} // namespace xic
