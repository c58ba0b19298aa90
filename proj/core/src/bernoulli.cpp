#include "xic/bernoulli.hpp"

#include <boost/multiprecision/cpp_bin_float.hpp>

#include "xic/errors.hpp"

namespace xic {

namespace {
using big = boost::multiprecision::cpp_bin_float_50;
}

BernoulliTable::BernoulliTable() {
    // B_n for n = 0..2N from B_n = -1/(n+1) * sum_{k<n} C(n+1,k) B_k.
    // The alternating sum cancels a few digits; 50-digit arithmetic keeps the
    // stored doubles correctly rounded through B_128.
    constexpr int nmax = 128;
    std::vector<big> b(nmax + 1);
    b[0] = 1;
    for (int n = 1; n <= nmax; ++n) {
        big acc = 0;
        big binom = 1; // C(n+1, 0)
        for (int k = 0; k < n; ++k) {
            acc += binom * b[k];
            binom = binom * (n + 1 - k) / (k + 1);
        }
        // binom is now C(n+1, n) = n+1
        b[n] = -acc / binom;
    }
    even_.resize(nmax / 2 + 1);
    even_over_fact_.resize(nmax / 2 + 1);
    big fact = 1;
    for (int j = 0; j <= nmax / 2; ++j) {
        even_[j] = static_cast<double>(b[2 * j]);
        if (j > 0) fact *= big(2 * j - 1) * big(2 * j);
        even_over_fact_[j] = static_cast<double>(b[2 * j] / fact);
    }
}

const BernoulliTable& BernoulliTable::instance() {
    static const BernoulliTable table;
    return table;
}

double BernoulliTable::b(int n) const {
    if (n < 0) throw DomainError("bernoulli: negative index");
    if (n == 1) return -0.5;
    if (n % 2 != 0) return 0.0;
    if (n > capacity()) throw CapacityError("bernoulli: index beyond table capacity");
    return even_[n / 2];
}

double BernoulliTable::b_over_factorial(int two_j) const {
    if (two_j < 0 || two_j % 2 != 0) throw DomainError("bernoulli_over_factorial: index must be even");
    if (two_j > capacity()) throw CapacityError("bernoulli_over_factorial: index beyond table capacity");
    return even_over_fact_[two_j / 2];
}

double bernoulli(int n) { return BernoulliTable::instance().b(n); }

double bernoulli_over_factorial(int two_j) {
    return BernoulliTable::instance().b_over_factorial(two_j);
}

} // namespace xic
