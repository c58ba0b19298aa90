#ifndef XIC_BERNOULLI_HPP
#define XIC_BERNOULLI_HPP

#include <span>
#include <vector>

namespace xic {

// Even-index Bernoulli numbers B_0, B_2, ..., B_{2N}, computed once from the
// defining recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0 in 50-digit arithmetic
// and cached as doubles. Read-only after construction.
class BernoulliTable {
public:
    static const BernoulliTable& instance();

    // Largest index n for which bernoulli(n) is tabulated.
    int capacity() const { return static_cast<int>(even_.size() - 1) * 2; }

    // B_{2j} for j = 0..capacity()/2.
    std::span<const double> even_values() const { return even_; }

    double b(int n) const;                   // B_n (odd n > 1 gives 0)
    double b_over_factorial(int two_j) const; // B_{2j}/(2j)!

private:
    BernoulliTable();
    std::vector<double> even_;
    std::vector<double> even_over_fact_;
};

// B_n. n = 1 gives -1/2; odd n > 1 gives 0 by convention.
double bernoulli(int n);

// B_{2j}/(2j)!, the weight appearing in every Euler-Maclaurin tail.
double bernoulli_over_factorial(int two_j);

} // namespace xic

#endif
