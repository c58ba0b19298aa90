#ifndef XIC_PRECISION_HPP
#define XIC_PRECISION_HPP

#include "xic/errors.hpp"

namespace xic {

// Tolerance and budget configuration threaded through every evaluation.
// target_rel_tol drives the quadrature and series engines; identity_tol is
// the acceptance bound for identity checks.
struct PrecisionContext {
    double target_rel_tol = 1e-10;
    double identity_tol = 1e-8;
    long max_quad_evals = 2'000'000;
    int em_order = 8;

    void validate() const {
        if (!(target_rel_tol > 0.0 && target_rel_tol <= identity_tol && identity_tol < 1.0))
            throw ContractError("PrecisionContext: need 0 < target_rel_tol <= identity_tol < 1");
        if (em_order < 2 || em_order % 2 != 0)
            throw ContractError("PrecisionContext: em_order must be even and >= 2");
        if (max_quad_evals < 1000)
            throw ContractError("PrecisionContext: max_quad_evals must be >= 1000");
    }
};

} // namespace xic

#endif
