#ifndef XIC_TRANSFORMS_HPP
#define XIC_TRANSFORMS_HPP

#include <utility>

#include "xic/cxmath.hpp"
#include "xic/precision.hpp"
#include "xic/quadrature.hpp"

namespace xic::transforms {

// Vertical-line contour: Re s = abscissa_c, truncated at |Im s| = half_height.
struct ContourSpec {
    double abscissa_c = 0.0;  // 0 -> strip midpoint Re z / 2
    double half_height = 0.0; // 0 -> 40 + |Im z|
    double panel_tol = 0.0;   // 0 -> ctx.target_rel_tol
};

struct KernelOptions {
    double t_max = 0.0; // force the truncation point of the t-integral when > 0
};

// Gamma((z-2+it)/4) Gamma((z-2-it)/4) Xi((t+i(z-1))/2) Xi((t-i(z-1))/2) / (z^2+t^2):
// the kernel shared by every Xi-integral here. Real and positive-decaying for
// real z and t.
Complex xi_gamma_kernel(const Complex& z, double t);

// 8 (4 pi)^{(z-4)/2} / Gamma(z) * \int_0^inf kernel(z,t) cos(t log(alpha)/2) dt.
QuadratureResult xi_kernel_integral(const Complex& z, double alpha, const PrecisionContext& ctx,
                                    const KernelOptions& opts = {});

// -pi^{-3/2} \int_0^inf |Xi(t/2) Gamma((-1+it)/4)|^2 cos(t log(alpha)/2)/(1+t^2) dt.
double ramanujan_integral(double alpha, const PrecisionContext& ctx,
                          const KernelOptions& opts = {});

// alpha^{z/2}/(2 pi i Gamma(z)) \int_{c-iH}^{c+iH} Gamma(s)zeta(s)Gamma(z-s)zeta(z-s) alpha^{-s} ds,
// Re z > 2, 1 < c < Re z - 1.
Complex mellin_line_integral(const Complex& z, double alpha, const ContourSpec& spec,
                             const PrecisionContext& ctx);

// (1/2 pi i) \int B(s, z-s) zeta(s) x^{-s} ds = sum_{m>=1} (1 + x m)^{-z}.
Complex mellin_beta_series(double x, const Complex& z, const ContourSpec& spec,
                           const PrecisionContext& ctx);

// (1/8)(4 pi)^{-(s-3)/2} \int_0^inf x^s / ((e^{x e^n}-1)(e^{x e^{-n}}-1)) dx, Re s > 1.
QuadratureResult rhs_eq19(const Complex& s, double n, const PrecisionContext& ctx);

// \int_0^inf Gamma((s-1+it)/4)Gamma((s-1-it)/4) Xi((t+is)/2)Xi((t-is)/2) cos(nt)/((s+1)^2+t^2) dt.
QuadratureResult lhs_eq19(const Complex& s, double n, const PrecisionContext& ctx,
                          const KernelOptions& opts = {});

// Same integral continued to -1 < Re s < 1.
QuadratureResult lhs_eq20(const Complex& s, double n, const PrecisionContext& ctx,
                          const KernelOptions& opts = {});

// (1/8)(4 pi)^{-(s-3)/2} \int_0^inf x^s (1/(e^{x e^n}-1) - 1/(x e^n))
//                                      (1/(e^{x e^{-n}}-1) - 1/(x e^{-n})) dx,
// -1 < Re s < 1. The integrand decays only like x^{Re s - 2}; the tail is
// split into exponential pieces plus the exact power integral.
QuadratureResult rhs_eq20(const Complex& s, double n, const PrecisionContext& ctx);

// (quadrature, closed form) for \int_0^inf sin(alpha x y)/(e^{2 pi y}-1) dy
// against (1/2)(1/(e^{alpha x}-1) - 1/(alpha x) + 1/2).
std::pair<double, double> sine_kernel_check(double alpha, double x, const PrecisionContext& ctx);

struct ClosedQuadPair {
    double closed = 0.0;
    double quadrature = 0.0;
};
struct Int12Result {
    ClosedQuadPair int1; // zeta(1-s)/(4 cos(pi s/2)) vs (1/2) \int x^{s-1}/(e^{2 pi x}-1) dx
    ClosedQuadPair int2; // zeta(-s)/(8 sin(pi s/2)) vs -(1/4) \int x^s/(e^{2 pi x}-1) dx
};
Int12Result int1_int2_check(double s, const PrecisionContext& ctx);

// (alpha^{(s+1)/2}/2) \int_0^inf x^s/((e^{2 pi x}-1)(e^{alpha x}-1)) dx for
// Re s > 1; invariant under alpha <-> beta with alpha beta = 4 pi^2.
QuadratureResult modular_g_reduced(const Complex& s, double alpha, const PrecisionContext& ctx);

// |lhs_eq19 - (rhs_eq19 + deleted term)| with the deleted term
// -(1/4)(4 pi)^{(s-3)/2} Gamma(s) zeta(s) cosh(n(1-s)); bounded away from 0.
double spurious_term_falsification(double s, double n, const PrecisionContext& ctx);

namespace detail {

// \int_0^inf x^{z-1} / ((e^{a x}-1)(e^{b x}-1)) dx for Re z > 2; the
// x^{z-3}-type singular part near 0 is integrated in closed form.
QuadratureResult double_bose_mellin(const Complex& z, double a, double b,
                                    const PrecisionContext& ctx);

// \int_0^inf x^p / (e^{c x}-1) dx for Re p > 0 (equals Gamma(p+1)zeta(p+1)/c^{p+1}).
QuadratureResult bose_mellin_single(const Complex& p, double c, const PrecisionContext& ctx);

} // namespace detail

} // namespace xic::transforms

#endif
