#include <doctest.h>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "gratio/verify.hpp"

using namespace gratio;

TEST_CASE("oracle_ratio_pochhammer matches the published exact values") {
    CHECK(std::fabs(oracle_ratio_pochhammer({ParamSet(0.7, 1.2, 0.4), 10.0}) -
                    0.97729983) < 5e-9);
    CHECK(std::fabs(oracle_ratio_pochhammer({ParamSet(11.7, 11.2, 11.4), -5.0}) -
                    1.01011438) < 5e-9);
}

TEST_CASE("oracle at n = 0 reduces to the base gamma ratio") {
    const ParamSet p(0.7, 1.2, 0.4);
    const double base = (log_gamma_signed(p.a) * log_gamma_signed(p.b) /
                         log_gamma_signed(p.c) / log_gamma_signed(p.d))
                            .to_real();
    CHECK(oracle_ratio_pochhammer({p, 0.0}) == doctest::Approx(base).epsilon(1e-14));
    CHECK(oracle_ratio_pochhammer({p, 0.0}) ==
          doctest::Approx(exact_ratio({p, 0.0})).epsilon(1e-12));
}

TEST_CASE("oracle requires integer n") {
    CHECK_THROWS_AS(oracle_ratio_pochhammer({ParamSet(0.7, 1.2, 0.4), 10.5}),
                    std::invalid_argument);
}

TEST_CASE("format_fixed rounds to the requested decimals") {
    CHECK(format_fixed(0.97729983, 8) == "0.97729983");
    CHECK(format_fixed(0.977142857143, 7) == "0.9771429");
    CHECK(format_fixed(-3.41881036942, 6) == "-3.418810");
    CHECK(format_fixed(26.4309462665, 6) == "26.430946");
}

TEST_CASE("all six tables reproduce their fixtures string-exactly") {
    const std::string dir = fixture_dir();
    for (TableId id : {TableId::T1, TableId::T2, TableId::T3a, TableId::T3b,
                       TableId::T4a, TableId::T4b}) {
        CAPTURE(table_id_name(id));
        const auto repro = reproduce_table(table_spec(id));
        const auto fixture = load_fixture(dir, id);
        const auto diffs = compare_table(repro, fixture);
        for (const auto& d : diffs) {
            FAIL_CHECK(table_id_name(id) << ": " << d);
        }
        CHECK(diffs.empty());
    }
}

TEST_CASE("fixture metadata matches the hard-coded specs") {
    const std::string dir = fixture_dir();
    for (TableId id : {TableId::T1, TableId::T2, TableId::T3a, TableId::T3b,
                       TableId::T4a, TableId::T4b}) {
        const auto spec = table_spec(id);
        const auto fx = load_fixture(dir, id);
        CHECK(fx.a == spec.params.a);
        CHECK(fx.b == spec.params.b);
        CHECK(fx.c == spec.params.c);
        CHECK(fx.n == spec.n);
        CHECK(fx.decimals == spec.printed_decimals);
        CHECK(fx.exact_eq6.has_value() == spec.has_eq6);
    }
}

TEST_CASE("T3b and T4b eq6 values are half the exact ratios, as printed") {
    for (TableId id : {TableId::T3b, TableId::T4b}) {
        const auto repro = reproduce_table(table_spec(id));
        REQUIRE(repro.exact_eq6.has_value());
        CHECK(format_fixed(repro.exact_lhs / 2.0, 8) == format_fixed(*repro.exact_eq6, 8));
    }
}

TEST_CASE("full verification suite passes") {
    const SuiteReport report = run_suite(Suite::All);
    CHECK(report.checks.size() >= 13);
    for (const auto& c : report.checks) {
        CAPTURE(c.name);
        CAPTURE(c.detail);
        CHECK(c.pass);
    }
    CHECK(report.all_pass());
}

TEST_CASE("a corrupted fixture is flagged, not silently accepted") {
    namespace fs = std::filesystem;
    const fs::path tmp = fs::temp_directory_path() / "gratio_corrupt_fixtures";
    fs::remove_all(tmp);
    fs::create_directories(tmp);
    for (const auto& entry : fs::directory_iterator(fixture_dir())) {
        fs::copy_file(entry.path(), tmp / entry.path().filename());
    }
    {
        // flip one digit in the M=1 row of T1
        std::ifstream in(tmp / "T1.csv");
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        in.close();
        const auto pos = text.find("0.9771429");
        REQUIRE(pos != std::string::npos);
        text.replace(pos, 9, "0.9771428");
        std::ofstream out(tmp / "T1.csv", std::ios::trunc);
        out << text;
    }
    const auto repro = reproduce_table(table_spec(TableId::T1));
    const auto fx = load_fixture(tmp.string(), TableId::T1);
    const auto diffs = compare_table(repro, fx);
    CHECK_FALSE(diffs.empty());

    setenv("GRATIO_FIXTURES", tmp.string().c_str(), 1);
    const SuiteReport report = run_suite(Suite::Tables);
    unsetenv("GRATIO_FIXTURES");
    CHECK_FALSE(report.all_pass());
    fs::remove_all(tmp);
}
