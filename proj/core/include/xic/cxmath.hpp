#ifndef XIC_CXMATH_HPP
#define XIC_CXMATH_HPP

#include <cmath>
#include <complex>

#include "xic/errors.hpp"

namespace xic {

// All complex arguments and values in the library. Components are required
// to stay finite; NaN/inf is reported through NonFiniteError, never returned.
using Complex = std::complex<double>;

inline bool is_finite(double x) { return std::isfinite(x); }
inline bool is_finite(const Complex& z) {
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

inline Complex ensure_finite(const Complex& z, const char* where) {
    if (!is_finite(z)) throw NonFiniteError(std::string("non-finite value in ") + where);
    return z;
}

inline double ensure_finite(double x, const char* where) {
    if (!std::isfinite(x)) throw NonFiniteError(std::string("non-finite value in ") + where);
    return x;
}

// b^e for real b > 0 and complex exponent, via exp(e log b).
inline Complex pow_rc(double b, const Complex& e) {
    return std::exp(e * std::log(b));
}

// (e^u - 1)/u, stable near u = 0.
inline Complex expm1_over(const Complex& u) {
    if (std::abs(u) < 1e-2) {
        // 1 + u/2 + u^2/6 + u^3/24 + u^4/120 + u^5/720
        Complex acc{1.0, 0.0};
        Complex t{1.0, 0.0};
        for (int k = 2; k <= 8; ++k) {
            t *= u / static_cast<double>(k);
            acc += t;
        }
        return acc;
    }
    return (std::exp(u) - 1.0) / u;
}

// sin(u)/u, stable near u = 0.
inline Complex sinc(const Complex& u) {
    if (std::abs(u) < 1e-4) {
        Complex u2 = u * u;
        return 1.0 - u2 / 6.0 + u2 * u2 / 120.0;
    }
    return std::sin(u) / u;
}

// 1/(e^y - 1) - 1/y + 1/2.  Odd in y, analytic for |y| < 2*pi; the direct
// formula loses all digits as y -> 0, so a short series takes over there.
inline double bose_regular(double y) {
    double ay = std::fabs(y);
    if (ay < 0.25) {
        double y2 = y * y;
        // B_2/2! y - B_4/4! y^3 ... = y/12 - y^3/720 + y^5/30240 - y^7/1209600 + y^9/47900160
        return y * (1.0 / 12.0 +
                    y2 * (-1.0 / 720.0 +
                          y2 * (1.0 / 30240.0 +
                                y2 * (-1.0 / 1209600.0 + y2 * (1.0 / 47900160.0)))));
    }
    if (y > 700.0) return -1.0 / y + 0.5;
    return 1.0 / std::expm1(y) - 1.0 / y + 0.5;
}

// Rising factorial s(s+1)...(s+m-1); poch(s,0) = 1.
inline Complex poch(const Complex& s, int m) {
    Complex p{1.0, 0.0};
    for (int i = 0; i < m; ++i) p *= s + static_cast<double>(i);
    return p;
}

} // namespace xic

#endif
