// Test-only reference implementations, independent of the library code paths
// they check: brute-force sums with tail bounds, 50-digit Euler-Maclaurin
// evaluation, and a Romberg integrator. Everything here favors transparency
// over speed.

#ifndef XIC_TEST_ORACLES_HPP
#define XIC_TEST_ORACLES_HPP

#include <complex>
#include <functional>
#include <string>

namespace oracle {

// zeta(s) for real s > 1: direct sum to N plus the integral tail with
// endpoint and first-curvature corrections.
double zeta_direct(double s, long n_terms = 100000);

// zeta(z, a) for real z > 1: same scheme.
double hurwitz_direct(double z, double a, long n_terms = 100000);

// 50-digit Euler-Maclaurin zeta/Hurwitz (order 20), evaluated in
// boost::multiprecision and rounded to double at the end. Valid for any real
// argument except the pole.
double zeta_hp(double s);
double hurwitz_hp(double z, double a);

// varphi(z, x) = zeta(z,x) - x^{-z}/2 + x^{1-z}/(1-z) through the 50-digit path.
double varphi_hp(double z, double x);

// 50-digit log Gamma for x > 0 (shifted Stirling, order 20).
double lgamma_hp(double x);

// psi(x) from its definitional series -gamma - sum(1/(m+x) - 1/(m+1)),
// 10^7 terms plus the analytic remainder of the tail.
double digamma_series(double x, long n_terms = 10000000);

// Romberg integration of a smooth real integrand.
double romberg(const std::function<double(double)>& f, double a, double b, int levels = 18,
               double tol = 1e-13);

// sum_{k>=1} sum_{m>=1} (k + alpha m)^{-z} for real z > 2, brute force with
// integral tail corrections in both indices.
double double_sum(double z, double alpha, long cap = 4000);

// sum_{n>=1} f(n) by partial sums at N and 2N with Richardson elimination of
// the leading N^{-p} tail.
double richardson_sum(const std::function<double(double)>& term, long n, double p);

} // namespace oracle

#endif
