#ifndef XIC_ZETA_HPP
#define XIC_ZETA_HPP

#include "xic/cxmath.hpp"

namespace xic {

// Riemann zeta. Euler-Maclaurin for Re s >= 1/2; the non-symmetric functional
// equation zeta(s) = 2^s pi^{s-1} Gamma(1-s) zeta(1-s) sin(pi s/2) below.
Complex riemann_zeta(const Complex& s);

// (s-1) zeta(s), entire; evaluated without forming the pole. For Re s >= 1/2
// this is the Euler-Maclaurin sum with the pole term replaced by its exact
// N^{1-s} limit, so s = 1 is an ordinary point.
Complex zeta_one_product(const Complex& s);

// zeta'(0) = -log(2 pi)/2, as a named constant used by the z -> 1 limits.
double zeta_deriv_zero();

// Hurwitz zeta(z, a) = sum_{n>=0} (n+a)^{-z} for Re z > -1, a > 0, z != 1.
// Direct terms to a shifted start A plus the Bernoulli tail.
Complex hurwitz_zeta(const Complex& z, double a);

namespace detail {

// sum_{j>=1} B_{2j}/(2j)! (z)_{2j-1} A^{-z-2j+1}: the correction part of the
// Hurwitz expansion about a large argument A.
Complex hurwitz_bernoulli_tail(const Complex& z, double A, double* err = nullptr);

// Start-of-tail threshold for accuracy at this z.
double hurwitz_shift_target(const Complex& z);

} // namespace detail

} // namespace xic

#endif
