#include "xic/xi.hpp"

#include <cmath>

#include "xic/constants.hpp"
#include "xic/gamma.hpp"
#include "xic/zeta.hpp"

namespace xic {

Complex xi_small(const Complex& s) {
    const Complex pref = pow_rc(kPi, -s / 2.0) * gamma(1.0 + s / 2.0);
    if (s.real() >= 0.5) {
        return ensure_finite(pref * zeta_one_product(s), "xi_small");
    }
    return ensure_finite(pref * (s - 1.0) * riemann_zeta(s), "xi_small");
}

Complex xi_capital(const Complex& t) {
    const Complex i{0.0, 1.0};
    return xi_small(0.5 + i * t);
}

} // namespace xic
