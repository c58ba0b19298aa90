#include "xic/euler_maclaurin.hpp"

#include <cmath>

#include "xic/bernoulli.hpp"

namespace xic {

Complex euler_maclaurin_tail(const SmoothTailFn& f, double n_start, const PrecisionContext& ctx,
                             double* err_estimate) {
    ctx.validate();
    const double N = n_start;
    Complex acc = f.integral_tail(N) + 0.5 * f.value(N);
    const double scale = std::abs(acc);

    double prev_mag = 0.0;
    double last_mag = 0.0;
    const int m = ctx.em_order;
    for (int j = 1; j <= m; ++j) {
        Complex term = -bernoulli_over_factorial(2 * j) * f.derivative(2 * j - 1, N);
        const double mag = std::abs(term);
        if (j > 1 && mag > prev_mag) {
            // entered the divergent regime of the asymptotic series
            if (j == 2 && prev_mag > 0.25 * (scale + prev_mag)) {
                throw ContractError("euler_maclaurin_tail: correction terms diverge at this n_start");
            }
            last_mag = mag; // first omitted term
            break;
        }
        acc += term;
        prev_mag = mag;
        last_mag = mag;
    }
    if (err_estimate) *err_estimate = last_mag;
    return ensure_finite(acc, "euler_maclaurin_tail");
}

} // namespace xic
