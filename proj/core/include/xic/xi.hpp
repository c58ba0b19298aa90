#ifndef XIC_XI_HPP
#define XIC_XI_HPP

#include "xic/cxmath.hpp"

namespace xic {

// xi(s) = (s-1) pi^{-s/2} Gamma(1 + s/2) zeta(s), entire. For Re s >= 1/2 the
// (s-1) zeta(s) product is evaluated jointly, so the zeta pole at s = 1 never
// appears; below the critical line zeta goes through its functional equation.
Complex xi_small(const Complex& s);

// Xi(t) = xi(1/2 + i t); real and even for real t.
Complex xi_capital(const Complex& t);
inline Complex xi_capital(double t) { return xi_capital(Complex{t, 0.0}); }

} // namespace xic

#endif
