#ifndef XIC_REPORT_IO_HPP
#define XIC_REPORT_IO_HPP

#include <string>
#include <vector>

#include "xic/checks.hpp"

namespace xic::harness {

enum class ReportFormat { json, csv };

// JSON: one object per report, numeric fields round-trip exactly.
// CSV: header `identity,param:*,side:*,max_abs_err,max_rel_err,pass,wall_time_ms`,
// one row per report, complex values rendered as "re+imi", LF line endings.
std::string emit(const std::vector<CheckReport>& reports, ReportFormat format);

} // namespace xic::harness

#endif
