#ifndef XIC_PHI_HPP
#define XIC_PHI_HPP

#include "xic/cxmath.hpp"

namespace xic {

// phi(x) = psi(x) + 1/(2x) - log x; decays like -1/(12 x^2).
double phi_ramanujan(double x);

// varphi(z, x) = zeta(z, x) - x^{-z}/2 + x^{1-z}/(1-z) for 0 < Re z < 2,
// z != 1 (z = 1 is served by varphi_limit_at_one). Assembled so the zeta pole
// and the 1/(1-z) pole cancel exactly and large x produces no cancellation.
Complex varphi(const Complex& z, double x);

// lim_{z->1} varphi(z, x) = -phi(x), computed directly.
double varphi_limit_at_one(double x);

namespace detail {

// varphi for any Re w > -1 including w = 1; the workhorse behind varphi,
// the series tails, and the phi sum.
Complex varphi_any(const Complex& w, double x);

// varphi(w, A)/w for A beyond the shift target, with the leading factor of w
// cancelled term by term; finite at w = 0.
Complex varphi_over_w(const Complex& w, double A);

} // namespace detail

} // namespace xic

#endif
