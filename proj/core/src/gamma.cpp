#include "xic/gamma.hpp"

#include <cmath>

#include "xic/bernoulli.hpp"
#include "xic/constants.hpp"
#include "xic/zeta.hpp"

namespace xic {

namespace {

constexpr int kStirlingTerms = 14;
constexpr double kShiftTo = 10.0;

bool at_nonpositive_integer(const Complex& z) {
    return z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real());
}

// Stirling series, valid for Re w >= kShiftTo:
// (w - 1/2) log w - w + log(2 pi)/2 + sum_j B_{2j} / (2j (2j-1) w^{2j-1})
Complex stirling_log_gamma(const Complex& w) {
    Complex acc = (w - 0.5) * std::log(w) - w + 0.5 * kLog2Pi;
    const Complex w2 = w * w;
    Complex wp = w;
    for (int j = 1; j <= kStirlingTerms; ++j) {
        acc += bernoulli(2 * j) / (2.0 * j * (2.0 * j - 1.0)) / wp;
        wp *= w2;
    }
    return acc;
}

} // namespace

Complex log_sin_pi(const Complex& z) {
    const double y = z.imag();
    if (std::fabs(y) <= 1.0) {
        return std::log(std::sin(kPi * z));
    }
    // sin(pi z) = -e^{-i pi z} (1 - e^{2 i pi z}) / (2i)   for Im z > 0,
    // where |e^{2 i pi z}| = e^{-2 pi Im z} is small.
    const Complex i{0.0, 1.0};
    if (y > 0.0) {
        Complex small = std::exp(2.0 * kPi * i * z);
        return -i * kPi * z + std::log(1.0 - small) - std::log(2.0 * i) + Complex{0.0, kPi};
    }
    Complex small = std::exp(-2.0 * kPi * i * z);
    return i * kPi * z + std::log(1.0 - small) - std::log(-2.0 * i) + Complex{0.0, -kPi};
}

Complex log_gamma(const Complex& z) {
    if (at_nonpositive_integer(z)) throw PoleError("log_gamma: pole at nonpositive integer");
    if (z.real() >= 0.5) {
        Complex acc{0.0, 0.0};
        Complex w = z;
        while (w.real() < kShiftTo) {
            acc += std::log(w);
            w += 1.0;
        }
        return ensure_finite(stirling_log_gamma(w) - acc, "log_gamma");
    }
    // reflection: log Gamma(z) = log pi - log sin(pi z) - log Gamma(1 - z)
    Complex v = std::log(kPi) - log_sin_pi(z) - log_gamma(1.0 - z);
    return ensure_finite(v, "log_gamma");
}

Complex gamma(const Complex& z) {
    if (at_nonpositive_integer(z)) throw PoleError("gamma: pole at nonpositive integer");
    return ensure_finite(std::exp(log_gamma(z)), "gamma");
}

double digamma(double x) {
    if (!(x > 0.0)) throw DomainError("digamma: requires x > 0");
    double acc = 0.0;
    while (x < kShiftTo) {
        acc -= 1.0 / x;
        x += 1.0;
    }
    double v = std::log(x) - 0.5 / x;
    const double x2 = x * x;
    double xp = x2;
    for (int j = 1; j <= 10; ++j) {
        v -= bernoulli(2 * j) / (2.0 * j * xp);
        xp *= x2;
    }
    return ensure_finite(v + acc, "digamma");
}

double polygamma(int k, double x) {
    if (k < 1) throw DomainError("polygamma: requires k >= 1");
    if (!(x > 0.0)) throw DomainError("polygamma: requires x > 0");
    if (k > 150) throw CapacityError("polygamma: order too large");
    double fact = 1.0;
    for (int i = 2; i <= k; ++i) fact *= i;
    const double sign = (k % 2 == 0) ? -1.0 : 1.0;
    const Complex h = hurwitz_zeta(Complex{static_cast<double>(k + 1), 0.0}, x);
    return ensure_finite(sign * fact * h.real(), "polygamma");
}

} // namespace xic
