#ifndef XIC_EULER_MACLAURIN_HPP
#define XIC_EULER_MACLAURIN_HPP

#include <functional>

#include "xic/cxmath.hpp"
#include "xic/precision.hpp"

namespace xic {

// A smooth, eventually-decaying term function together with its analytic odd
// derivatives and tail integral, as required by the Euler-Maclaurin formula.
struct SmoothTailFn {
    std::function<Complex(double)> value;           // f(x)
    std::function<Complex(int, double)> derivative; // f^{(k)}(x), odd k up to 2*em_order - 1
    std::function<Complex(double)> integral_tail;   // \int_x^inf f
};

// sum_{k >= n_start} f(k), approximated as
//   \int_N^inf f + f(N)/2 - sum_{j=1}^{m} B_{2j}/(2j)! f^{(2j-1)}(N).
// Correction terms are truncated at the first sign of growth (the usual
// asymptotic rule); the magnitude of the last retained term is reported as
// the error estimate. Corrections growing from the start raise ContractError.
Complex euler_maclaurin_tail(const SmoothTailFn& f, double n_start, const PrecisionContext& ctx,
                             double* err_estimate = nullptr);

} // namespace xic

#endif
