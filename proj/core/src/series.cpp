#include "xic/series.hpp"

#include <cmath>

#include "xic/constants.hpp"
#include "xic/euler_maclaurin.hpp"
#include "xic/gamma.hpp"
#include "xic/phi.hpp"
#include "xic/zeta.hpp"

namespace xic::series {

namespace {

constexpr long kDirectCap = 10'000;

void check_alpha(double alpha) {
    if (!(alpha >= 1e-3 && alpha <= 1e3))
        throw DomainError("series: alpha outside the supported range [1e-3, 1e3]; "
                          "evaluate the 1/alpha side instead");
}

// Direct summation until the term magnitude falls below tol/100 or the index
// cap is reached, but never before `floor` terms (the tail formulas assume a
// start point past the asymptotic threshold).
template <typename Term>
long direct_phase(const Term& term, double small, long floor, Complex& acc) {
    long k = 0;
    for (;;) {
        ++k;
        const Complex t = term(static_cast<double>(k));
        acc += t;
        if (k >= floor && (std::abs(t) < small || k >= kDirectCap)) break;
    }
    return k;
}

SeriesResult finish(Complex acc, long k, const SmoothTailFn& tail_fn,
                    const PrecisionContext& ctx) {
    // direct phase holds terms 1..k; the tail covers k+1 onwards
    double tail_err = 0.0;
    const Complex tail = euler_maclaurin_tail(tail_fn, static_cast<double>(k + 1), ctx, &tail_err);
    SeriesResult res;
    res.value = ensure_finite(acc + tail, "series");
    res.terms_summed = k;
    res.tail_estimate = tail_err;
    if (!(tail_err < ctx.identity_tol / 10.0))
        throw BudgetError("series: tail estimate did not converge below identity_tol/10",
                          res.value, tail_err);
    return res;
}

} // namespace

SeriesResult sum_hurwitz_shifted(const Complex& z, double alpha, const PrecisionContext& ctx) {
    ctx.validate();
    check_alpha(alpha);
    if (!(z.real() > 2.0)) throw DomainError("sum_hurwitz_shifted: requires Re z > 2");

    const double small = ctx.identity_tol / 100.0;
    const long floor = std::max<long>(50, static_cast<long>(std::ceil(12.0 * alpha)));
    Complex acc{0.0, 0.0};
    const auto term = [&](double k) { return hurwitz_zeta(z, 1.0 + k / alpha); };
    const long k = direct_phase(term, small, floor, acc);

    SmoothTailFn tail_fn;
    tail_fn.value = term;
    tail_fn.derivative = [&](int j, double k2) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        return sign * poch(z, j) * std::pow(alpha, -j) * hurwitz_zeta(z + static_cast<double>(j), 1.0 + k2 / alpha);
    };
    tail_fn.integral_tail = [&](double k2) {
        return alpha * hurwitz_zeta(z - 1.0, 1.0 + k2 / alpha) / (z - 1.0);
    };
    return finish(acc, k, tail_fn, ctx);
}

SeriesResult sum_varphi(const Complex& z, double alpha, const PrecisionContext& ctx) {
    ctx.validate();
    check_alpha(alpha);
    if (z == Complex{1.0, 0.0}) throw PoleError("sum_varphi: z = 1 excluded");
    if (!(z.real() > 0.0 && z.real() < 2.0)) throw DomainError("sum_varphi: requires 0 < Re z < 2");

    const double small = ctx.identity_tol / 100.0;
    const double shift = detail::hurwitz_shift_target(z - 1.0);
    const long floor = std::max<long>(50, static_cast<long>(std::ceil(shift / alpha)));
    Complex acc{0.0, 0.0};
    const auto term = [&](double n) { return xic::detail::varphi_any(z, n * alpha); };
    const long k = direct_phase(term, small, floor, acc);

    SmoothTailFn tail_fn;
    tail_fn.value = term;
    tail_fn.derivative = [&](int j, double n) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        return sign * poch(z, j) * std::pow(alpha, j) *
               xic::detail::varphi_any(z + static_cast<double>(j), n * alpha);
    };
    tail_fn.integral_tail = [&](double n) {
        return xic::detail::varphi_over_w(z - 1.0, n * alpha) / alpha;
    };
    return finish(acc, k, tail_fn, ctx);
}

SeriesResult sum_phi(double alpha, const PrecisionContext& ctx) {
    ctx.validate();
    check_alpha(alpha);
    const double small = ctx.identity_tol / 100.0;
    const long floor = std::max<long>(50, static_cast<long>(std::ceil(12.0 / alpha)));
    Complex acc{0.0, 0.0};
    const auto term = [&](double n) { return Complex{phi_ramanujan(n * alpha), 0.0}; };
    const long k = direct_phase(term, small, floor, acc);

    SmoothTailFn tail_fn;
    tail_fn.value = term;
    tail_fn.derivative = [&](int j, double n) {
        // d^j/dn^j phi(n alpha) = (-1)^{j+1} j! alpha^j varphi(1+j, n alpha)
        double fact = 1.0;
        for (int i = 2; i <= j; ++i) fact *= i;
        const double sign = (j % 2 == 0) ? -1.0 : 1.0;
        return sign * fact * std::pow(alpha, j) *
               xic::detail::varphi_any(Complex{1.0 + j, 0.0}, n * alpha);
    };
    tail_fn.integral_tail = [&](double n) {
        // \int_A^inf phi = log(2 pi)/2 - log Gamma(A) - log(A)/2 + A log A - A
        const double A = n * alpha;
        const double lg = log_gamma(Complex{A, 0.0}).real();
        return Complex{(0.5 * kLog2Pi - lg - 0.5 * std::log(A) + A * std::log(A) - A) / alpha, 0.0};
    };
    return finish(acc, k, tail_fn, ctx);
}

SeriesResult sum_polygamma(int k_order, double x, const PrecisionContext& ctx) {
    ctx.validate();
    check_alpha(x);
    if (k_order < 2)
        throw DomainError("sum_polygamma: requires k >= 2 for convergence");
    if (!(x > 0.0)) throw DomainError("sum_polygamma: requires x > 0");

    double fact = 1.0;
    for (int i = 2; i <= k_order; ++i) fact *= i;
    const double sign = (k_order % 2 == 0) ? -1.0 : 1.0;
    const Complex zk{static_cast<double>(k_order + 1), 0.0};

    const double small = ctx.identity_tol / (100.0 * fact);
    const long floor = std::max<long>(50, static_cast<long>(std::ceil(12.0 * x)));
    Complex acc{0.0, 0.0};
    const auto term = [&](double n) { return hurwitz_zeta(zk, 1.0 + n * x); };
    const long k = direct_phase(term, small, floor, acc);

    SmoothTailFn tail_fn;
    tail_fn.value = term;
    tail_fn.derivative = [&](int j, double n) {
        const double s = (j % 2 == 0) ? 1.0 : -1.0;
        return s * poch(zk, j) * std::pow(x, j) *
               hurwitz_zeta(zk + static_cast<double>(j), 1.0 + n * x);
    };
    tail_fn.integral_tail = [&](double n) {
        return hurwitz_zeta(zk - 1.0, 1.0 + n * x) / (static_cast<double>(k_order) * x);
    };
    SeriesResult inner = finish(acc, k, tail_fn, ctx);
    inner.value *= sign * fact;
    inner.tail_estimate *= fact;
    return inner;
}

Complex lhs_theorem31(const Complex& z, const ModularPair& pair, Side side,
                      const PrecisionContext& ctx) {
    const double a = side == Side::alpha ? pair.alpha : pair.beta;
    return pow_rc(a, -z / 2.0) * sum_hurwitz_shifted(z, a, ctx).value;
}

Complex lhs_theorem41(const Complex& z, const ModularPair& pair, Side side,
                      const PrecisionContext& ctx) {
    const double a = side == Side::alpha ? pair.alpha : pair.beta;
    if (z == Complex{1.0, 0.0}) {
        return Complex{-lhs_ramanujan(pair, side, ctx), 0.0};
    }
    if (!(z.real() > 0.0 && z.real() < 2.0))
        throw DomainError("lhs_theorem41: requires 0 < Re z < 2");
    const Complex s = sum_varphi(z, a, ctx).value;
    const Complex v = s - riemann_zeta(z) / (2.0 * pow_rc(a, z)) -
                      riemann_zeta(z - 1.0) / (a * (z - 1.0));
    return ensure_finite(pow_rc(a, z / 2.0) * v, "lhs_theorem41");
}

double lhs_ramanujan(const ModularPair& pair, Side side, const PrecisionContext& ctx) {
    const double a = side == Side::alpha ? pair.alpha : pair.beta;
    const double s = sum_phi(a, ctx).value.real();
    return ensure_finite(std::sqrt(a) * ((kEulerGamma - std::log(2.0 * kPi * a)) / (2.0 * a) + s),
                         "lhs_ramanujan");
}

} // namespace xic::series
