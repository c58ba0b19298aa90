#include "xic/report_io.hpp"

#include <cstdio>

#include "json.hpp"

namespace xic::harness {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_complex(const Complex& z) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "%.17g%+.17gi", z.real(), z.imag());
    return buf;
}

std::string emit_json(const std::vector<CheckReport>& reports) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : reports) {
        nlohmann::json jr;
        jr["identity"] = r.identity;
        nlohmann::json jp = nlohmann::json::object();
        for (const auto& [k, v] : r.params) jp[k] = v;
        jr["params"] = jp;
        nlohmann::json js = nlohmann::json::array();
        for (const auto& [label, v] : r.sides)
            js.push_back({{"label", label}, {"re", v.real()}, {"im", v.imag()}});
        jr["sides"] = js;
        jr["max_abs_err"] = r.max_abs_err;
        jr["max_rel_err"] = r.max_rel_err;
        jr["pass"] = r.pass;
        jr["wall_time_ms"] = r.wall_time_ms;
        jr["truncations"] = r.truncations;
        if (!r.error.empty()) jr["error"] = r.error;
        arr.push_back(std::move(jr));
    }
    return arr.dump(2) + "\n";
}

std::string emit_csv(const std::vector<CheckReport>& reports) {
    // union of parameter and side columns, in first-appearance order
    std::vector<std::string> param_cols, side_cols;
    auto note = [](std::vector<std::string>& cols, const std::string& k) {
        for (const auto& c : cols)
            if (c == k) return;
        cols.push_back(k);
    };
    for (const auto& r : reports) {
        for (const auto& [k, v] : r.params) note(param_cols, k);
        for (const auto& [label, v] : r.sides) note(side_cols, label);
    }

    std::string out = "identity";
    for (const auto& c : param_cols) out += ",param:" + c;
    for (const auto& c : side_cols) out += ",side:" + c;
    out += ",max_abs_err,max_rel_err,pass,wall_time_ms\n";

    for (const auto& r : reports) {
        out += r.identity;
        for (const auto& c : param_cols) {
            out += ",";
            auto it = r.params.find(c);
            if (it != r.params.end()) out += fmt17(it->second);
        }
        for (const auto& c : side_cols) {
            out += ",";
            for (const auto& [label, v] : r.sides)
                if (label == c) {
                    out += fmt_complex(v);
                    break;
                }
        }
        out += "," + fmt17(r.max_abs_err);
        out += "," + fmt17(r.max_rel_err);
        out += r.pass ? ",true" : ",false";
        out += "," + fmt17(r.wall_time_ms);
        out += "\n";
    }
    return out;
}

} // namespace

std::string emit(const std::vector<CheckReport>& reports, ReportFormat format) {
    return format == ReportFormat::json ? emit_json(reports) : emit_csv(reports);
}

} // namespace xic::harness
