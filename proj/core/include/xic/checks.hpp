#ifndef XIC_CHECKS_HPP
#define XIC_CHECKS_HPP

#include <map>
#include <string>
#include <vector>

#include "xic/cxmath.hpp"
#include "xic/precision.hpp"

namespace xic::harness {

enum class IdentityId {
    thm31,
    thm41,
    cor32,
    guinand,
    ramanujan,
    eq19,
    eq20,
    eq15mod,
    sine,
    int12,
    mellin_titchmarsh,
    beta_series,
    spurious,
};

struct IdentityInfo {
    IdentityId id;
    std::string name;
    std::string description;
    std::map<std::string, double> defaults;
};

// Every IdentityId appears exactly once, with runnable defaults.
const std::vector<IdentityInfo>& identity_registry();
const IdentityInfo& identity_info(IdentityId id);
IdentityId identity_from_name(const std::string& name); // DomainError on unknown names

using Params = std::map<std::string, double>;

struct CheckReport {
    std::string identity;
    Params params;
    std::vector<std::pair<std::string, Complex>> sides;
    double max_abs_err = 0.0;
    double max_rel_err = 0.0; // max_abs_err / (1 + max |side|)
    bool pass = false;
    double wall_time_ms = 0.0;
    std::vector<double> truncations;
    std::string error; // empty unless the evaluation failed
};

// Evaluates every side the identity equates and fills a report. Module
// errors and bad parameters produce a failure report, never an exception.
CheckReport run_check(IdentityId id, const Params& params, const PrecisionContext& ctx);

// Cartesian product over the grid, row-major over sorted keys. Points may be
// evaluated concurrently; the output order is fixed. A failing point is
// recorded and the sweep continues.
std::vector<CheckReport> sweep(IdentityId id, const std::map<std::string, std::vector<double>>& grid,
                               const PrecisionContext& ctx);

} // namespace xic::harness

#endif
