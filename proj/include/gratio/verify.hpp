#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gratio/expansion.hpp"

namespace gratio {

enum class TableId { T1, T2, T3a, T3b, T4a, T4b };

const char* table_id_name(TableId id);
std::optional<TableId> parse_table_id(const std::string& s);

struct TableSpec {
    TableId id;
    ParamSet params;
    double n;
    int printed_decimals;     // decimals of the per-row entries
    bool has_eq6;             // T3/T4 blocks also list the convergent limit
};

TableSpec table_spec(TableId id);

struct TableRow {
    int M;
    double rhs_e4;
    double rhs_e5;
    bool marked_e4 = false;
    bool marked_e5 = false;
};

struct TableReproduction {
    TableSpec spec;
    std::vector<TableRow> rows;   // M = 1..10, values rounded to printed_decimals
    double exact_lhs;             // rounded to 8 decimals, as printed
    std::optional<double> exact_eq6;
};

TableReproduction reproduce_table(const TableSpec& spec);

// One published table stored as text, values kept as the exact printed strings.
struct FixtureRow {
    int M;
    std::string rhs_e4;
    std::string rhs_e5;
    bool marked_e4;
    bool marked_e5;
};

struct TableFixture {
    TableId id;
    double a, b, c, n;
    int decimals;
    std::string exact_lhs;
    std::optional<std::string> exact_eq6;
    std::vector<FixtureRow> rows;
};

// Fixture directory: $GRATIO_FIXTURES when set, else the build-time default.
std::string fixture_dir();
TableFixture load_fixture(const std::string& dir, TableId id);

// Human-readable mismatch list; empty means string-exact agreement.
std::vector<std::string> compare_table(const TableReproduction& repro,
                                       const TableFixture& fixture);

// Decimal formatting used everywhere a table value is printed or compared.
std::string format_fixed(double v, int decimals);

// Independent route to exact_ratio for integer n: pure Pochhammer products
// times the base-parameter gamma ratio, no large-argument gamma evaluation.
double oracle_ratio_pochhammer(const EvalPoint& pt);

struct CheckResult {
    std::string name;
    double tolerance;
    double observed;
    bool pass;
    std::string detail;
};

struct SuiteReport {
    std::vector<CheckResult> checks;
    bool all_pass() const;
};

enum class Suite { Oracle, Decay, Limit, Tables, All };
std::optional<Suite> parse_suite(const std::string& s);

SuiteReport run_suite(Suite which);

}  // namespace gratio
