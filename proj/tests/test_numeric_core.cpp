#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "xic/bernoulli.hpp"
#include "xic/constants.hpp"
#include "xic/cxmath.hpp"
#include "xic/euler_maclaurin.hpp"
#include "xic/precision.hpp"
#include "xic/quadrature.hpp"

#include "support/approx.hpp"
#include "support/oracles.hpp"

using xic::Complex;
using xic::PrecisionContext;
using testutil::close_abs;
using testutil::close_rel;

namespace {
const PrecisionContext ctx{};
}

TEST_CASE("precision context invariants") {
    PrecisionContext bad = ctx;
    bad.target_rel_tol = 1e-6; // > identity_tol
    CHECK_THROWS_AS(bad.validate(), xic::ContractError);
    bad = ctx;
    bad.em_order = 7;
    CHECK_THROWS_AS(bad.validate(), xic::ContractError);
    bad = ctx;
    bad.max_quad_evals = 10;
    CHECK_THROWS_AS(bad.validate(), xic::ContractError);
    CHECK_NOTHROW(ctx.validate());
}

TEST_CASE("bernoulli numbers: pinned values and conventions") {
    CHECK(xic::bernoulli(0) == 1.0);
    CHECK(xic::bernoulli(2) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));
    CHECK(xic::bernoulli(4) == doctest::Approx(-1.0 / 30.0).epsilon(1e-15));
    CHECK(xic::bernoulli(1) == -0.5);
    CHECK(xic::bernoulli(3) == 0.0);
    CHECK(xic::bernoulli(17) == 0.0);
    CHECK_THROWS_AS(xic::bernoulli(500), xic::CapacityError);
    CHECK_THROWS_AS(xic::bernoulli(-2), xic::DomainError);
}

TEST_CASE("bernoulli numbers: forward recurrence oracle for the low orders") {
    // solve sum_{k=0}^{n} C(n+1,k) B_k = 0 forward, in plain double
    double b[12] = {1.0};
    for (int n = 1; n <= 11; ++n) {
        double acc = 0.0, binom = 1.0;
        for (int k = 0; k < n; ++k) {
            acc += binom * b[k];
            binom = binom * (n + 1 - k) / (k + 1);
        }
        b[n] = -acc / binom;
    }
    CHECK(xic::bernoulli(2) == doctest::Approx(b[2]).epsilon(1e-14));
    CHECK(xic::bernoulli(4) == doctest::Approx(b[4]).epsilon(1e-14));
    CHECK(xic::bernoulli(6) == doctest::Approx(b[6]).epsilon(1e-14));
    CHECK(xic::bernoulli(8) == doctest::Approx(b[8]).epsilon(1e-14));
    CHECK(xic::bernoulli(10) == doctest::Approx(b[10]).epsilon(1e-14));
}

TEST_CASE("bernoulli recurrence residual stays below 1e-14 across the table") {
    const int cap = xic::BernoulliTable::instance().capacity();
    for (int n = 1; n < cap; ++n) {
        double acc = 0.0, scale = 0.0, binom = 1.0;
        for (int k = 0; k <= n; ++k) {
            const double term = binom * xic::bernoulli(k);
            acc += term;
            scale += std::fabs(term);
            binom = binom * (n + 1 - k) / (k + 1);
        }
        CHECK(std::fabs(acc) <= 1e-14 * scale);
    }
}

TEST_CASE("integrate_finite: pinned integrals") {
    auto one = [](double) { return Complex{1.0, 0.0}; };
    auto r1 = xic::integrate_finite(one, 0.0, 1.0, ctx);
    CHECK(close_abs(r1.value, 1.0, 1e-14));
    CHECK(r1.err_estimate >= 0.0);
    CHECK(r1.evals <= ctx.max_quad_evals);

    auto cosf = [](double x) { return Complex{std::cos(x), 0.0}; };
    auto r2 = xic::integrate_finite(cosf, 0.0, xic::kPi / 2.0, ctx);
    CHECK(close_abs(r2.value, 1.0, 1e-13));

    // x/(e^x - 1) over [0,40] -> Gamma(2) zeta(2) = pi^2/6
    auto planck = [](double x) { return Complex{x / std::expm1(x), 0.0}; };
    auto r3 = xic::integrate_finite(planck, 0.0, 40.0, ctx);
    const double want = oracle::zeta_direct(2.0);
    CHECK(close_rel(r3.value, want, 1e-11));
    CHECK(close_rel(r3.value, xic::kPi * xic::kPi / 6.0, 1e-11));
    CHECK(std::abs(r3.value - want) <=
          std::max(r3.err_estimate * 5.0, ctx.identity_tol * std::abs(r3.value)));

    // independent integrator agrees
    const double romb = oracle::romberg([](double x) { return x / std::expm1(x); }, 1e-12, 40.0);
    CHECK(close_rel(r3.value, romb, 1e-11));
}

TEST_CASE("integrate_finite: error paths") {
    CHECK_THROWS_AS(xic::integrate_finite([](double) { return Complex{1.0, 0.0}; }, 1.0, 0.0, ctx),
                    xic::ContractError);

    // interior pole makes a sample non-finite
    auto sing = [](double x) { return Complex{1.0 / (x - 0.5), 0.0}; };
    CHECK_THROWS_AS(xic::integrate_finite(sing, 0.0, 1.0, ctx), xic::DomainError);

    // tiny budget against a fast oscillation
    PrecisionContext small = ctx;
    small.max_quad_evals = 1000;
    auto rough = [](double x) { return Complex{std::cos(3000.0 * x), 0.0}; };
    CHECK_THROWS_AS(xic::integrate_finite(rough, 0.0, 1.0, small), xic::BudgetError);
    try {
        xic::integrate_finite(rough, 0.0, 1.0, small);
    } catch (const xic::BudgetError& e) {
        CHECK(xic::is_finite(e.best_value)); // best estimate rides along
    }
}

TEST_CASE("quadrature linearity and interval additivity") {
    std::mt19937 rng(20240817);
    std::uniform_real_distribution<double> coef(-2.0, 2.0);
    for (int trial = 0; trial < 12; ++trial) {
        const double a = coef(rng), b = coef(rng);
        const double w1 = 1.0 + std::fabs(coef(rng)), w2 = 1.0 + std::fabs(coef(rng));
        auto f = [&](double x) { return Complex{std::cos(w1 * x), std::sin(0.3 * x)}; };
        auto g = [&](double x) { return Complex{std::exp(-x * x), 0.1 * x}; };
        auto h = [&](double x) { return a * f(x) + b * g(x); };

        auto rf = xic::integrate_finite(f, -1.0, 2.0, ctx);
        auto rg = xic::integrate_finite(g, -1.0, 2.0, ctx);
        auto rh = xic::integrate_finite(h, -1.0, 2.0, ctx);
        const double budget =
            2.0 * (std::fabs(a) * rf.err_estimate + std::fabs(b) * rg.err_estimate +
                   rh.err_estimate) + 1e-12;
        CHECK(std::abs(rh.value - (a * rf.value + b * rg.value)) <= budget);

        const double mid = -1.0 + 3.0 * (0.25 + 0.5 * std::fabs(std::sin(w2)));
        auto r1 = xic::integrate_finite(h, -1.0, mid, ctx);
        auto r2 = xic::integrate_finite(h, mid, 2.0, ctx);
        CHECK(std::abs(rh.value - (r1.value + r2.value)) <=
              2.0 * (rh.err_estimate + r1.err_estimate + r2.err_estimate) + 1e-12);
    }
}

TEST_CASE("integrate_semi_infinite: pinned integrals") {
    auto expf = [](double t) { return Complex{std::exp(-t), 0.0}; };
    auto r1 = xic::integrate_semi_infinite(expf, 1.0, ctx);
    CHECK(close_rel(r1.value, 1.0, 1e-11));
    CHECK(r1.truncation_point > 0.0);

    auto damped = [](double t) { return Complex{std::exp(-t) * std::cos(t), 0.0}; };
    auto r2 = xic::integrate_semi_infinite(damped, 1.0, ctx);
    CHECK(close_rel(r2.value, 0.5, 1e-10));

    // t^3/(e^t - 1) -> Gamma(4) zeta(4) = pi^4/15
    auto planck3 = [](double t) { return Complex{t * t * t / std::expm1(t), 0.0}; };
    auto r3 = xic::integrate_semi_infinite(planck3, 0.9, ctx);
    CHECK(close_rel(r3.value, 6.0 * oracle::zeta_direct(4.0), 1e-11));
    CHECK(close_rel(r3.value, std::pow(xic::kPi, 4) / 15.0, 1e-11));

    CHECK_THROWS_AS(xic::integrate_semi_infinite(expf, 0.0, ctx), xic::ContractError);
    CHECK_THROWS_AS(xic::integrate_semi_infinite(expf, -2.0, ctx), xic::ContractError);
}

TEST_CASE("truncation point never grows when the decay rate doubles") {
    // both rates must genuinely bound the integrand (true decay here is 4)
    for (double d : {0.3, 0.7, 1.0, 2.0}) {
        auto f = [](double t) { return Complex{std::exp(-4.0 * t) * (1.5 + std::cos(t)), 0.0}; };
        auto slow = xic::integrate_semi_infinite(f, d, ctx);
        auto fast = xic::integrate_semi_infinite(f, 2.0 * d, ctx);
        CHECK(fast.truncation_point <= slow.truncation_point);
        CHECK(close_rel(fast.value, slow.value, 1e-9));
    }
}

namespace {

// power-law tail sum_{k>=N} k^{-s} via the library op, against a direct oracle
double em_power_tail(double s, double n_start, const PrecisionContext& c, double* err = nullptr) {
    xic::SmoothTailFn f;
    f.value = [=](double x) { return Complex{std::pow(x, -s), 0.0}; };
    f.derivative = [=](int j, double x) {
        double p = 1.0;
        for (int i = 0; i < j; ++i) p *= (s + i);
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        return Complex{sign * p * std::pow(x, -s - j), 0.0};
    };
    f.integral_tail = [=](double x) { return Complex{std::pow(x, 1.0 - s) / (s - 1.0), 0.0}; };
    return xic::euler_maclaurin_tail(f, n_start, c, err).real();
}

} // namespace

TEST_CASE("euler_maclaurin_tail: pinned sums") {
    // sum_{k>=10} k^-4
    double err = 0.0;
    const double t4 = em_power_tail(4.0, 10.0, ctx, &err);
    CHECK(t4 == doctest::Approx(oracle::hurwitz_direct(4.0, 10.0)).epsilon(1e-12));
    CHECK(err >= 0.0);

    // sum_{k>=1} k^-2 = pi^2/6. At n_start = 1 the asymptotic corrections
    // bottom out early; the value is still good to its reported estimate.
    double err2 = 0.0;
    const double t2 = em_power_tail(2.0, 1.0, ctx, &err2);
    CHECK(std::fabs(t2 - xic::kPi * xic::kPi / 6.0) <= 1.5 * err2);
    // a few steps in, the same sum is machine tight:
    // sum_{k>=1} k^-2 = sum_{k<6} k^-2 + tail(6)
    double head = 0.0;
    for (int k = 1; k < 6; ++k) head += 1.0 / (k * k);
    CHECK(head + em_power_tail(2.0, 6.0, ctx) ==
          doctest::Approx(xic::kPi * xic::kPi / 6.0).epsilon(1e-13));

    // geometric: sum_{k>=5} e^-k = e^-5/(1 - e^-1)
    xic::SmoothTailFn g;
    g.value = [](double x) { return Complex{std::exp(-x), 0.0}; };
    g.derivative = [](int j, double x) {
        const double sign = (j % 2 == 0) ? 1.0 : -1.0;
        return Complex{sign * std::exp(-x), 0.0};
    };
    g.integral_tail = [](double x) { return Complex{std::exp(-x), 0.0}; };
    const double geo = xic::euler_maclaurin_tail(g, 5.0, ctx).real();
    CHECK(geo == doctest::Approx(std::exp(-5.0) / (1.0 - std::exp(-1.0))).epsilon(1e-9));
}

TEST_CASE("euler_maclaurin_tail: order truncation near the divergent regime") {
    PrecisionContext wide = ctx;
    wide.em_order = 20; // deliberately beyond the useful order at this n_start
    double err = 0.0;
    const double got = em_power_tail(1.1, 2.0, wide, &err);
    const double want = oracle::hurwitz_direct(1.1, 2.0, 2000000);
    // truncated at the smallest term; honest about the remaining plateau error
    CHECK(err > 0.0);
    CHECK(err < 1e-4);
    CHECK(std::fabs(got - want) <= 3.0 * err);
}
