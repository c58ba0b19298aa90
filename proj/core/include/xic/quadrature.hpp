#ifndef XIC_QUADRATURE_HPP
#define XIC_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "xic/cxmath.hpp"
#include "xic/precision.hpp"

namespace xic {

struct QuadratureResult {
    Complex value{};
    double err_estimate = 0.0;
    long evals = 0;
    double truncation_point = 0.0; // the finite T substituted for infinity; 0 for finite ranges
};

using Integrand = std::function<Complex(double)>;

// Optional per-call overrides for the adaptive engine.
struct QuadOptions {
    double rel_tol = 0.0;                  // 0 -> ctx.target_rel_tol
    double abs_tol = 0.0;                  // absolute floor for the stopping test
    std::vector<double> breakpoints{};     // interior seed points, strictly inside (a,b)
};

// Adaptive quadrature on [a,b]: fixed 15-point Gauss-Legendre panels, bisected
// until the summed local error estimates pass a mixed absolute/relative test.
QuadratureResult integrate_finite(const Integrand& f, double a, double b,
                                  const PrecisionContext& ctx, const QuadOptions& opts = {});

struct SemiInfOptions {
    double t_max_override = 0.0; // force this truncation point when > 0
    double rel_tol = 0.0;
    double abs_tol = 0.0;
};

// Integral over [t0, infinity) of an integrand bounded by C e^{-decay_rate t}.
// The truncation point T is chosen so the analytic tail bound drops below
// identity_tol/10, with C estimated by sampling.
QuadratureResult integrate_semi_infinite_from(const Integrand& f, double t0, double decay_rate,
                                              const PrecisionContext& ctx,
                                              const SemiInfOptions& opts = {});

QuadratureResult integrate_semi_infinite(const Integrand& f, double decay_rate,
                                         const PrecisionContext& ctx,
                                         const SemiInfOptions& opts = {});

} // namespace xic

#endif
