#ifndef XIC_SERIES_HPP
#define XIC_SERIES_HPP

#include "xic/cxmath.hpp"
#include "xic/precision.hpp"

namespace xic::series {

// (alpha, beta) with beta = 1/alpha exactly as constructed.
struct ModularPair {
    double alpha;
    double beta;

    explicit ModularPair(double a) : alpha(a), beta(1.0 / a) {
        if (!(a > 0.0)) throw DomainError("ModularPair: alpha must be > 0");
    }
};

enum class Side { alpha, beta };

struct SeriesResult {
    Complex value{};
    long terms_summed = 0;
    double tail_estimate = 0.0;
};

// sum_{k>=1} zeta(z, 1 + k/alpha), Re z > 2. Direct terms, then an
// Euler-Maclaurin tail in the summation index.
SeriesResult sum_hurwitz_shifted(const Complex& z, double alpha, const PrecisionContext& ctx);

// sum_{n>=1} varphi(z, n alpha), 0 < Re z < 2, z != 1.
SeriesResult sum_varphi(const Complex& z, double alpha, const PrecisionContext& ctx);

// sum_{n>=1} phi(n alpha), terms ~ -1/(12 n^2 alpha^2).
SeriesResult sum_phi(double alpha, const PrecisionContext& ctx);

// sum_{n>=1} psi^{(k)}(1 + n x), k >= 2.
SeriesResult sum_polygamma(int k, double x, const PrecisionContext& ctx);

// alpha^{-z/2} sum_{k>=1} zeta(z, 1 + k/alpha) on the selected side.
Complex lhs_theorem31(const Complex& z, const ModularPair& pair, Side side,
                      const PrecisionContext& ctx);

// alpha^{z/2} (sum varphi(z, n alpha) - zeta(z)/(2 alpha^z) - zeta(z-1)/(alpha(z-1))).
// z = 1 is removable: that branch assembles
// -sqrt(alpha){(gamma - log(2 pi alpha))/(2 alpha) + sum phi(n alpha)} directly.
Complex lhs_theorem41(const Complex& z, const ModularPair& pair, Side side,
                      const PrecisionContext& ctx);

// sqrt(alpha){(gamma - log(2 pi alpha))/(2 alpha) + sum phi(n alpha)}.
double lhs_ramanujan(const ModularPair& pair, Side side, const PrecisionContext& ctx);

} // namespace xic::series

#endif
