#include "xic/phi.hpp"

#include <cmath>

#include "xic/bernoulli.hpp"
#include "xic/gamma.hpp"
#include "xic/zeta.hpp"

namespace xic {

namespace detail {

Complex varphi_any(const Complex& w, double x) {
    if (!(x > 0.0)) throw DomainError("varphi: requires x > 0");
    const double target = hurwitz_shift_target(w);
    if (x >= target) {
        // all explicit terms of the expansion cancel against the definition,
        // leaving only the Bernoulli corrections
        return ensure_finite(hurwitz_bernoulli_tail(w, x), "varphi");
    }
    const int N = static_cast<int>(std::ceil(target - x));
    const double A = x + N;
    Complex direct{0.0, 0.0};
    for (int n = 1; n < N; ++n) direct += pow_rc(x + n, -w);
    // (A^{1-w} - x^{1-w})/(w-1) = -x^{1-w} log(A/x) * (e^u - 1)/u,
    // u = (1-w) log(A/x); smooth across w = 1
    const double lr = std::log(A / x);
    const Complex u = (1.0 - w) * lr;
    const Complex pole_pair = -pow_rc(x, 1.0 - w) * lr * expm1_over(u);
    const Complex v = direct + 0.5 * pow_rc(x, -w) + 0.5 * pow_rc(A, -w) + pole_pair +
                      hurwitz_bernoulli_tail(w, A);
    return ensure_finite(v, "varphi");
}

Complex varphi_over_w(const Complex& w, double A) {
    // Bernoulli tail with the common factor w of (w)_{2j-1} divided out
    Complex acc{0.0, 0.0};
    Complex pochv{1.0, 0.0};                // (w+1)(w+2)...(w+2j-2)
    Complex apow = pow_rc(A, -w - 1.0);
    const double a2 = A * A;
    double prev = 1e308;
    for (int j = 1; j <= 14; ++j) {
        const Complex term = bernoulli_over_factorial(2 * j) * pochv * apow;
        const double mag = std::abs(term);
        if (mag > prev) break;
        acc += term;
        prev = mag;
        if (mag < 2.2e-16 * std::abs(acc) + 1e-300) break;
        pochv *= (w + (2.0 * j - 1.0)) * (w + 2.0 * j);
        apow /= a2;
    }
    return ensure_finite(acc, "varphi_over_w");
}

} // namespace detail

double phi_ramanujan(double x) {
    if (!(x > 0.0)) throw DomainError("phi_ramanujan: requires x > 0");
    return digamma(x) + 0.5 / x - std::log(x);
}

Complex varphi(const Complex& z, double x) {
    if (z == Complex{1.0, 0.0})
        throw PoleError("varphi: z = 1 excluded, use varphi_limit_at_one");
    if (!(z.real() > 0.0 && z.real() < 2.0))
        throw DomainError("varphi: requires 0 < Re z < 2");
    return detail::varphi_any(z, x);
}

double varphi_limit_at_one(double x) { return -phi_ramanujan(x); }

} // namespace xic
