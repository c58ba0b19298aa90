#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdlib>
#include <string>

#include "json.hpp"

#include "xic/checks.hpp"
#include "xic/report_io.hpp"

using namespace xic::harness;

namespace {

const xic::PrecisionContext ctx{};

int run_cli(const std::string& args) {
    const char* bin = std::getenv("XICHECK_BIN");
    REQUIRE(bin != nullptr);
    const std::string cmd = std::string(bin) + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    REQUIRE(status >= 0);
    return WEXITSTATUS(status);
}

} // namespace

TEST_CASE("registry is total and every identity passes on its defaults") {
    CHECK(identity_registry().size() == 13);
    for (const auto& info : identity_registry()) {
        CHECK(identity_from_name(info.name) == info.id);
        const CheckReport rep = run_check(info.id, {}, ctx);
        INFO(info.name, ": ", rep.error);
        CHECK(rep.pass);
        CHECK(rep.sides.size() >= 2);
        CHECK(rep.error.empty());
        CHECK(rep.max_abs_err >= 0.0);
        CHECK(rep.wall_time_ms >= 0.0);
    }
    CHECK_THROWS_AS(identity_from_name("nonsense"), xic::DomainError);
}

TEST_CASE("reports are deterministic apart from wall time") {
    const Params p{{"z_re", 4.0}, {"alpha", 2.0}};
    const CheckReport a = run_check(IdentityId::thm31, p, ctx);
    const CheckReport b = run_check(IdentityId::thm31, p, ctx);
    REQUIRE(a.sides.size() == b.sides.size());
    for (size_t i = 0; i < a.sides.size(); ++i) {
        CHECK(a.sides[i].first == b.sides[i].first);
        CHECK(a.sides[i].second.real() == b.sides[i].second.real());
        CHECK(a.sides[i].second.imag() == b.sides[i].second.imag());
    }
    CHECK(a.max_abs_err == b.max_abs_err);
    CHECK(a.max_rel_err == b.max_rel_err);
    CHECK(a.truncations == b.truncations);
}

TEST_CASE("failure reports instead of exceptions") {
    // region violation
    const CheckReport r1 = run_check(IdentityId::thm31, {{"z_re", 1.5}}, ctx);
    CHECK_FALSE(r1.pass);
    CHECK_FALSE(r1.error.empty());

    // unknown parameter key
    const CheckReport r2 = run_check(IdentityId::thm31, {{"bogus", 1.0}}, ctx);
    CHECK_FALSE(r2.pass);
    CHECK(r2.error.find("bogus") != std::string::npos);

    // alpha outside the supported range
    const CheckReport r3 = run_check(IdentityId::thm31, {{"alpha", 1e5}}, ctx);
    CHECK_FALSE(r3.pass);
    CHECK_FALSE(r3.error.empty());
}

TEST_CASE("sweep: order, counts, failure isolation") {
    const std::map<std::string, std::vector<double>> grid{{"z_re", {0.3, 1.7}},
                                                          {"alpha", {0.5, 2.0}}};
    const auto reports = sweep(IdentityId::thm41, grid, ctx);
    REQUIRE(reports.size() == 4);
    // row-major over sorted keys: alpha varies slower than z_re
    CHECK(reports[0].params.at("alpha") == 0.5);
    CHECK(reports[0].params.at("z_re") == 0.3);
    CHECK(reports[1].params.at("alpha") == 0.5);
    CHECK(reports[1].params.at("z_re") == 1.7);
    CHECK(reports[2].params.at("alpha") == 2.0);
    for (const auto& r : reports) CHECK(r.pass);

    // empty grid dimension -> empty report list
    const auto none = sweep(IdentityId::thm41, {{"z_re", {}}}, ctx);
    CHECK(none.empty());

    const auto gu = sweep(IdentityId::guinand, {{"k", {2.0, 3.0}}, {"x", {2.0}}}, ctx);
    REQUIRE(gu.size() == 2);
    CHECK(gu[0].pass);
    CHECK(gu[1].pass);

    // one bad point does not abort the sweep
    const auto mixed = sweep(IdentityId::thm31, {{"z_re", {1.5, 4.0}}, {"alpha", {2.0}}}, ctx);
    REQUIRE(mixed.size() == 2);
    CHECK_FALSE(mixed[0].pass);
    CHECK(mixed[1].pass);
}

TEST_CASE("json emission round-trips every numeric field bit for bit") {
    const CheckReport rep = run_check(IdentityId::sine, {}, ctx);
    CHECK(rep.pass);
    const std::string text = emit({rep}, ReportFormat::json);
    CHECK(text.find("\"pass\": true") != std::string::npos);

    const auto parsed = nlohmann::json::parse(text);
    REQUIRE(parsed.size() == 1);
    const auto& jr = parsed[0];
    CHECK(jr["identity"].get<std::string>() == rep.identity);
    CHECK(jr["max_abs_err"].get<double>() == rep.max_abs_err);
    CHECK(jr["max_rel_err"].get<double>() == rep.max_rel_err);
    CHECK(jr["wall_time_ms"].get<double>() == rep.wall_time_ms);
    for (const auto& [k, v] : rep.params) CHECK(jr["params"][k].get<double>() == v);
    REQUIRE(jr["sides"].size() == rep.sides.size());
    for (size_t i = 0; i < rep.sides.size(); ++i) {
        CHECK(jr["sides"][i]["label"].get<std::string>() == rep.sides[i].first);
        CHECK(jr["sides"][i]["re"].get<double>() == rep.sides[i].second.real());
        CHECK(jr["sides"][i]["im"].get<double>() == rep.sides[i].second.imag());
    }
}

TEST_CASE("csv emission shape") {
    const auto reports = sweep(IdentityId::guinand, {{"k", {2.0, 3.0}}, {"x", {2.0}}}, ctx);
    const std::string text = emit(reports, ReportFormat::csv);

    // one header plus one row per report, LF endings
    size_t lines = 0;
    for (char c : text)
        if (c == '\n') ++lines;
    CHECK(lines == reports.size() + 1);
    CHECK(text.find('\r') == std::string::npos);
    CHECK(text.rfind("identity,param:", 0) == 0);
    CHECK(text.find(",side:") != std::string::npos);
    CHECK(text.find(",true") != std::string::npos);
    // complex cells carry the re+imi form
    CHECK(text.find("i,") != std::string::npos);
}

TEST_CASE("cli exit codes: 0 pass, 1 failed check, 2 usage") {
    CHECK(run_cli("list") == 0);
    CHECK(run_cli("check --identity sine") == 0);
    CHECK(run_cli("check --identity sine --out json") == 0);
    CHECK(run_cli("sweep --identity guinand --grid \"k=2;x=2\" --out csv") == 0);
    CHECK(run_cli("check --identity thm31 --z-re 1.5") == 1);        // region violation
    CHECK(run_cli("check --identity no_such_identity") == 2);        // unknown id
    CHECK(run_cli("check") == 2);                                    // missing required option
    CHECK(run_cli("frobnicate") == 2);                               // unknown subcommand
}
