#ifndef XIC_ERRORS_HPP
#define XIC_ERRORS_HPP

#include <complex>
#include <stdexcept>
#include <string>

namespace xic {

// Base class for every error the library raises.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Argument outside the mathematical domain of an operation.
struct DomainError : Error {
    using Error::Error;
};

// Evaluation requested exactly at a pole.
struct PoleError : Error {
    using Error::Error;
};

// A caller-side precondition was violated (bad context, bad contour, ...).
struct ContractError : Error {
    using Error::Error;
};

// Request beyond a fixed table capacity.
struct CapacityError : Error {
    using Error::Error;
};

// A NaN or infinity appeared where a finite value is required.
struct NonFiniteError : Error {
    using Error::Error;
};

// Evaluation budget exhausted; carries the best estimate so far.
struct BudgetError : Error {
    BudgetError(const std::string& what, std::complex<double> best, double err)
        : Error(what), best_value(best), best_err(err) {}
    std::complex<double> best_value;
    double best_err;
};

} // namespace xic

#endif
