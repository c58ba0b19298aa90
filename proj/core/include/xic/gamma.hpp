#ifndef XIC_GAMMA_HPP
#define XIC_GAMMA_HPP

#include "xic/cxmath.hpp"

namespace xic {

// Principal-branch log Gamma: recurrence shift to Re >= 10, then the Stirling
// series with 14 Bernoulli terms; reflection through log sin(pi z) for
// Re z < 1/2. exp(log_gamma(z)) == Gamma(z). Poles at 0, -1, -2, ...
Complex log_gamma(const Complex& z);

Complex gamma(const Complex& z);

// log(sin(pi z)) with the growth factored out for large |Im z|.
Complex log_sin_pi(const Complex& z);

// psi(x) for x > 0: recurrence shift to x >= 10, then
// log x - 1/(2x) - sum B_{2j}/(2j x^{2j}).
double digamma(double x);

// psi^{(k)}(x) = (-1)^{k+1} k! zeta(k+1, x) for k >= 1, x > 0.
double polygamma(int k, double x);

} // namespace xic

#endif
