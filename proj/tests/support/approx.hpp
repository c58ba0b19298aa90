#ifndef XIC_TEST_APPROX_HPP
#define XIC_TEST_APPROX_HPP

#include <cmath>
#include <complex>

namespace testutil {

inline double rel_err(std::complex<double> a, std::complex<double> b) {
    const double scale = std::max(std::abs(a), std::abs(b));
    return std::abs(a - b) / (scale > 0.0 ? scale : 1.0);
}

inline bool close_rel(std::complex<double> a, std::complex<double> b, double tol) {
    return rel_err(a, b) <= tol;
}

inline bool close_abs(std::complex<double> a, std::complex<double> b, double tol) {
    return std::abs(a - b) <= tol;
}

// |a - b| <= tol * (1 + max(|a|,|b|)): the normalization used by the check runner.
inline bool close_mixed(std::complex<double> a, std::complex<double> b, double tol) {
    return std::abs(a - b) <= tol * (1.0 + std::max(std::abs(a), std::abs(b)));
}

} // namespace testutil

#endif
