// xicheck: numerical verification of the modular relations connecting
// Hurwitz zeta series, Mellin line integrals, and Riemann Xi kernel
// integrals, including Ramanujan's transformation formula and Guinand's
// polygamma identity.

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"

#include "xic/checks.hpp"
#include "xic/report_io.hpp"

namespace {

using xic::harness::CheckReport;
using xic::harness::ReportFormat;

struct CommonOpts {
    double tol = 0.0;
    int digits = 0;
    double tmax = 0.0;
    std::string out; // "", "json", or "csv"
};

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--tol", o.tol, "identity tolerance (default 1e-8)");
    cmd->add_option("--digits", o.digits, "identity tolerance as a digit count: tol = 10^-D");
    cmd->add_option("--tmax", o.tmax, "override the truncation point of the t-integrals");
    cmd->add_option("--out", o.out, "machine-readable output format")
        ->check(CLI::IsMember({"json", "csv"}));
}

xic::PrecisionContext make_ctx(const CommonOpts& o) {
    xic::PrecisionContext ctx;
    if (o.digits > 0) ctx.identity_tol = std::pow(10.0, -o.digits);
    if (o.tol > 0.0) ctx.identity_tol = o.tol;
    ctx.target_rel_tol = std::clamp(ctx.identity_tol / 100.0, 1e-13, 1e-5);
    return ctx;
}

void print_human(const std::vector<CheckReport>& reports) {
    for (const auto& r : reports) {
        std::printf("%s  %-18s", r.pass ? "PASS" : "FAIL", r.identity.c_str());
        std::string ps;
        for (const auto& [k, v] : r.params) {
            char buf[64];
            std::snprintf(buf, sizeof buf, " %s=%g", k.c_str(), v);
            ps += buf;
        }
        std::printf("%s  max_rel_err=%.3g  (%.0f ms)\n", ps.c_str(), r.max_rel_err,
                    r.wall_time_ms);
        if (!r.error.empty()) std::printf("      error: %s\n", r.error.c_str());
    }
}

int output(const std::vector<CheckReport>& reports, const CommonOpts& o) {
    if (o.out == "json")
        std::fputs(xic::harness::emit(reports, ReportFormat::json).c_str(), stdout);
    else if (o.out == "csv")
        std::fputs(xic::harness::emit(reports, ReportFormat::csv).c_str(), stdout);
    else
        print_human(reports);
    const bool all_pass =
        std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.pass; });
    return all_pass ? 0 : 1;
}

// "z=2.5,4;alpha=0.5,2" -> {z: [2.5,4], alpha: [0.5,2]}
std::map<std::string, std::vector<double>> parse_grid(const std::string& text) {
    std::map<std::string, std::vector<double>> grid;
    std::stringstream dims(text);
    std::string dim;
    while (std::getline(dims, dim, ';')) {
        if (dim.empty()) continue;
        const auto eq = dim.find('=');
        if (eq == std::string::npos)
            throw CLI::ValidationError("--grid", "expected key=v1,v2,... in '" + dim + "'");
        const std::string key = dim.substr(0, eq);
        std::vector<double> vals;
        std::stringstream vs(dim.substr(eq + 1));
        std::string v;
        while (std::getline(vs, v, ',')) {
            try {
                vals.push_back(std::stod(v));
            } catch (...) {
                throw CLI::ValidationError("--grid", "bad number '" + v + "'");
            }
        }
        grid[key] = vals;
    }
    return grid;
}

// CLI grid keys are the short names; map complex-valued ones to their real part.
std::string param_key(const std::string& k) {
    if (k == "z") return "z_re";
    if (k == "s") return "s_re";
    return k;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"numerical checks for Hurwitz-zeta / Riemann-Xi modular identities"};
    app.require_subcommand(1);

    // check
    auto* check = app.add_subcommand("check", "evaluate one identity and report pass/fail");
    std::string check_id;
    check->add_option("--identity", check_id, "identity id (see `xicheck list`)")->required();
    CommonOpts copts;
    struct {
        double z_re = NAN, z_im = NAN, alpha = NAN, s_re = NAN, n = NAN, x = NAN;
        int k = -1;
    } cp;
    check->add_option("--z-re", cp.z_re, "Re z");
    check->add_option("--z-im", cp.z_im, "Im z");
    check->add_option("--alpha", cp.alpha, "modular parameter alpha");
    check->add_option("--s-re", cp.s_re, "Re s");
    check->add_option("--n", cp.n, "kernel frequency n");
    check->add_option("--k", cp.k, "polygamma order k");
    check->add_option("--x", cp.x, "argument x");
    add_common(check, copts);

    // sweep
    auto* sweepc = app.add_subcommand("sweep", "evaluate an identity over a parameter grid");
    std::string sweep_id, grid_text;
    CommonOpts sopts;
    sweepc->add_option("--identity", sweep_id, "identity id")->required();
    sweepc->add_option("--grid", grid_text, "grid, e.g. \"z=2.5,4;alpha=0.5,2\"")->required();
    add_common(sweepc, sopts);

    // list
    auto* list = app.add_subcommand("list", "print the identity registry");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return e.get_exit_code() == 0 ? 0 : 2;
    }

    try {
        if (list->parsed()) {
            for (const auto& info : xic::harness::identity_registry()) {
                std::string ds;
                for (const auto& [k, v] : info.defaults) {
                    char buf[64];
                    std::snprintf(buf, sizeof buf, " %s=%g", k.c_str(), v);
                    ds += buf;
                }
                std::printf("%-18s %s\n%-18s defaults:%s\n", info.name.c_str(),
                            info.description.c_str(), "", ds.c_str());
            }
            return 0;
        }

        if (check->parsed()) {
            const auto id = xic::harness::identity_from_name(check_id);
            xic::harness::Params params;
            if (!std::isnan(cp.z_re)) params["z_re"] = cp.z_re;
            if (!std::isnan(cp.z_im)) params["z_im"] = cp.z_im;
            if (!std::isnan(cp.alpha)) params["alpha"] = cp.alpha;
            if (!std::isnan(cp.s_re)) params["s_re"] = cp.s_re;
            if (!std::isnan(cp.n)) params["n"] = cp.n;
            if (cp.k >= 0) params["k"] = cp.k;
            if (!std::isnan(cp.x)) params["x"] = cp.x;
            if (copts.tmax > 0.0) params["tmax"] = copts.tmax;
            const auto rep = xic::harness::run_check(id, params, make_ctx(copts));
            return output({rep}, copts);
        }

        if (sweepc->parsed()) {
            const auto id = xic::harness::identity_from_name(sweep_id);
            std::map<std::string, std::vector<double>> grid;
            for (const auto& [k, vs] : parse_grid(grid_text)) grid[param_key(k)] = vs;
            const auto reports = xic::harness::sweep(id, grid, make_ctx(sopts));
            return output(reports, sopts);
        }
    } catch (const xic::DomainError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
