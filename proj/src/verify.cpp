#include "gratio/verify.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

namespace gratio {

namespace {

constexpr int kTableRows = 10;
constexpr int kExactDecimals = 8;  // the papers' "exact value" lines

std::vector<std::string> split_csv(const std::string& line) {
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, ',')) fields.push_back(field);
    return fields;
}

double parse_double(const std::string& s) { return std::strtod(s.c_str(), nullptr); }

}  // namespace

const char* table_id_name(TableId id) {
    switch (id) {
        case TableId::T1: return "T1";
        case TableId::T2: return "T2";
        case TableId::T3a: return "T3a";
        case TableId::T3b: return "T3b";
        case TableId::T4a: return "T4a";
        case TableId::T4b: return "T4b";
    }
    return "?";
}

std::optional<TableId> parse_table_id(const std::string& s) {
    for (TableId id : {TableId::T1, TableId::T2, TableId::T3a, TableId::T3b,
                       TableId::T4a, TableId::T4b}) {
        if (s == table_id_name(id)) return id;
    }
    return std::nullopt;
}

TableSpec table_spec(TableId id) {
    switch (id) {
        case TableId::T1: return {id, ParamSet(0.7, 1.2, 0.4), 10.0, 7, false};
        case TableId::T2: return {id, ParamSet(-0.7, -1.2, -0.4), 10.0, 6, false};
        case TableId::T3a: return {id, ParamSet(-11.7, -11.2, -11.4), 10.0, 6, true};
        case TableId::T3b: return {id, ParamSet(-11.7, -11.2, -11.4), 20.0, 6, true};
        case TableId::T4a: return {id, ParamSet(11.7, 11.2, 11.4), -15.0, 6, true};
        case TableId::T4b: return {id, ParamSet(11.7, 11.2, 11.4), -5.0, 6, true};
    }
    throw std::invalid_argument("unknown table id");
}

std::string format_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", decimals, v);
    return buf;
}

TableReproduction reproduce_table(const TableSpec& spec) {
    const EvalPoint pt(spec.params, spec.n);
    const PartialSumResult e4 = partial_sum_e4(pt, kTableRows);
    const PartialSumResult e5 = partial_sum_e5(pt, kTableRows);

    TableReproduction out{spec, {}, 0.0, std::nullopt};
    double sum4 = e4.terms[0];
    double sum5 = e5.terms[0];
    for (int m = 1; m <= kTableRows; ++m) {
        sum4 += e4.terms[m];
        sum5 += e5.terms[m];
        TableRow row;
        row.M = m;
        row.rhs_e4 = parse_double(format_fixed(sum4, spec.printed_decimals));
        row.rhs_e5 = parse_double(format_fixed(sum5, spec.printed_decimals));
        out.rows.push_back(row);
    }
    out.exact_lhs = parse_double(format_fixed(exact_ratio(pt), kExactDecimals));
    if (spec.has_eq6) {
        out.exact_eq6 = parse_double(format_fixed(gauss_limit_e6(pt), kExactDecimals));
    }
    return out;
}

std::string fixture_dir() {
    if (const char* env = std::getenv("GRATIO_FIXTURES")) return env;
#ifdef GRATIO_DEFAULT_FIXTURE_DIR
    return GRATIO_DEFAULT_FIXTURE_DIR;
#else
    return "fixtures";
#endif
}

TableFixture load_fixture(const std::string& dir, TableId id) {
    const std::string path = dir + "/" + table_id_name(id) + ".csv";
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open fixture file: " + path);

    TableFixture fx{};
    fx.id = id;
    std::string line;
    bool saw_header = false;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        if (line[0] == '#') {
            const auto eq = line.find('=');
            if (eq == std::string::npos) continue;
            std::string key = line.substr(1, eq - 1);
            key.erase(0, key.find_first_not_of(' '));
            key.erase(key.find_last_not_of(' ') + 1);
            const std::string value = line.substr(eq + 1);
            if (key == "a") fx.a = parse_double(value);
            else if (key == "b") fx.b = parse_double(value);
            else if (key == "c") fx.c = parse_double(value);
            else if (key == "n") fx.n = parse_double(value);
            else if (key == "decimals") fx.decimals = std::atoi(value.c_str());
            else if (key == "exact") fx.exact_lhs = value;
            else if (key == "eq6") fx.exact_eq6 = value;
            continue;
        }
        if (!saw_header) {  // column-name row
            saw_header = true;
            continue;
        }
        const auto fields = split_csv(line);
        if (fields.size() != 5) {
            throw std::runtime_error("malformed fixture row in " + path + ": " + line);
        }
        FixtureRow row;
        row.M = std::atoi(fields[0].c_str());
        row.rhs_e4 = fields[1];
        row.rhs_e5 = fields[2];
        row.marked_e4 = fields[3] == "1";
        row.marked_e5 = fields[4] == "1";
        fx.rows.push_back(row);
    }
    if (fx.rows.size() != kTableRows) {
        throw std::runtime_error("fixture " + path + " does not have 10 rows");
    }
    return fx;
}

std::vector<std::string> compare_table(const TableReproduction& repro,
                                       const TableFixture& fixture) {
    std::vector<std::string> diffs;
    const int dec = repro.spec.printed_decimals;
    auto mismatch = [&diffs](const std::string& what, const std::string& got,
                             const std::string& want) {
        diffs.push_back(what + ": computed " + got + ", fixture " + want);
    };

    for (size_t i = 0; i < repro.rows.size() && i < fixture.rows.size(); ++i) {
        const TableRow& row = repro.rows[i];
        const FixtureRow& want = fixture.rows[i];
        const std::string tag = "M=" + std::to_string(row.M);
        const std::string got4 = format_fixed(row.rhs_e4, dec);
        const std::string got5 = format_fixed(row.rhs_e5, dec);
        if (got4 != want.rhs_e4) mismatch(tag + " rhs_e4", got4, want.rhs_e4);
        if (got5 != want.rhs_e5) mismatch(tag + " rhs_e5", got5, want.rhs_e5);
    }
    const std::string got_exact = format_fixed(repro.exact_lhs, kExactDecimals);
    if (got_exact != fixture.exact_lhs) mismatch("exact", got_exact, fixture.exact_lhs);
    if (repro.exact_eq6.has_value() != fixture.exact_eq6.has_value()) {
        diffs.push_back("eq6 presence differs between computation and fixture");
    } else if (repro.exact_eq6) {
        const std::string got_eq6 = format_fixed(*repro.exact_eq6, kExactDecimals);
        if (got_eq6 != *fixture.exact_eq6) mismatch("eq6", got_eq6, *fixture.exact_eq6);
    }
    return diffs;
}

double oracle_ratio_pochhammer(const EvalPoint& pt) {
    const double n_rounded = std::round(pt.n);
    if (std::fabs(pt.n - n_rounded) >= kPoleTol) {
        throw std::invalid_argument("oracle_ratio_pochhammer requires integer n");
    }
    const int n = static_cast<int>(n_rounded);
    const auto& p = pt.params;
    for (double x : {p.a, p.b, p.c, p.d}) {
        if (is_gamma_pole(x)) throw PoleError(x, "base parameter");
    }
    SignedLogValue value = pochhammer_signed_n(p.a, n);
    value *= pochhammer_signed_n(p.b, n);
    value /= pochhammer_signed_n(p.c, n);
    value /= pochhammer_signed_n(p.d, n);
    value *= log_gamma_signed(p.a);
    value *= log_gamma_signed(p.b);
    value /= log_gamma_signed(p.c);
    value /= log_gamma_signed(p.d);
    return value.to_real();
}

bool SuiteReport::all_pass() const {
    for (const auto& c : checks) {
        if (!c.pass) return false;
    }
    return true;
}

std::optional<Suite> parse_suite(const std::string& s) {
    if (s == "oracle") return Suite::Oracle;
    if (s == "decay") return Suite::Decay;
    if (s == "limit") return Suite::Limit;
    if (s == "tables") return Suite::Tables;
    if (s == "all") return Suite::All;
    return std::nullopt;
}

namespace {

bool oracle_point_valid(const ParamSet& p, int n) {
    for (double x : {p.a, p.b, p.c, p.d}) {
        if (is_gamma_pole(x) || is_gamma_pole(x + n)) return false;
        if (n < 0) {
            for (int k = n; k <= -1; ++k) {
                if (std::fabs(x + k) < kPoleTol) return false;
            }
        }
    }
    return true;
}

void run_oracle_checks(SuiteReport& report) {
    std::mt19937_64 rng(20260823);
    std::uniform_real_distribution<double> param(-5.0, 5.0);
    std::uniform_int_distribution<int> n_dist(-20, 40);

    double worst = 0.0;
    std::string worst_detail = "all 1000 points agree";
    int accepted = 0;
    while (accepted < 1000) {
        const ParamSet p(param(rng), param(rng), param(rng));
        const int n = n_dist(rng);
        if (!oracle_point_valid(p, n)) continue;
        ++accepted;
        const EvalPoint pt(p, static_cast<double>(n));
        const double direct = exact_ratio(pt);
        const double oracle = oracle_ratio_pochhammer(pt);
        const double rel = std::fabs(direct - oracle) /
                           std::max(std::fabs(direct), std::fabs(oracle));
        if (rel > worst) {
            worst = rel;
            char buf[160];
            std::snprintf(buf, sizeof buf,
                          "worst at a=%.6g b=%.6g c=%.6g n=%d", p.a, p.b, p.c, n);
            worst_detail = buf;
        }
    }
    report.checks.push_back({"oracle_equivalence_1000_random_points", 1e-10,
                             worst, worst <= 1e-10, worst_detail});
}

void run_decay_checks(SuiteReport& report) {
    const ParamSet p(0.3, 0.9, 0.5);
    for (int M : {1, 2, 3}) {
        for (double n : {40.0, 80.0}) {
            const double err_n =
                std::fabs(partial_sum_e4(EvalPoint(p, n), M).value -
                          exact_ratio(EvalPoint(p, n)));
            const double err_2n =
                std::fabs(partial_sum_e4(EvalPoint(p, 2 * n), M).value -
                          exact_ratio(EvalPoint(p, 2 * n)));
            const double ratio = err_2n / err_n;
            const double target = std::pow(2.0, -(M + 1));
            const double factor = ratio / target;
            char name[96];
            std::snprintf(name, sizeof name, "decay_M%d_n%g_to_%g", M, n, 2 * n);
            report.checks.push_back({name, 1.5, factor,
                                     factor <= 1.5 && factor >= 1.0 / 1.5,
                                     "observed E(2n)/E(n) over 2^-(M+1)"});
        }
    }
}

void run_limit_checks(SuiteReport& report) {
    for (TableId id : {TableId::T3a, TableId::T4a}) {
        const TableSpec spec = table_spec(id);
        const EvalPoint pt(spec.params, spec.n);
        const double eq6 = gauss_limit_e6(pt);
        const double lhs = exact_ratio(pt);
        for (Variant v : {Variant::E4, Variant::E5}) {
            const PartialSumResult sum = (v == Variant::E4)
                                             ? partial_sum_e4(pt, 200)
                                             : partial_sum_e5(pt, 200);
            const double rel = std::fabs(sum.value - eq6) / std::fabs(eq6);
            char name[96];
            std::snprintf(name, sizeof name, "limit_%s_%s_M200_vs_eq6",
                          table_id_name(id), v == Variant::E4 ? "e4" : "e5");
            report.checks.push_back({name, 1e-6, rel, rel <= 1e-6,
                                     "relative gap between M=200 sum and the convergent limit"});
        }
        const double half = partial_sum_e4(pt, 200).value / lhs;
        char name[96];
        std::snprintf(name, sizeof name, "limit_%s_half_of_lhs", table_id_name(id));
        report.checks.push_back({name, 0.05, std::fabs(half - 0.5),
                                 std::fabs(half - 0.5) <= 0.05,
                                 "convergent sum sits near half the exact ratio here"});
    }
}

void run_table_checks(SuiteReport& report) {
    const std::string dir = fixture_dir();
    for (TableId id : {TableId::T1, TableId::T2, TableId::T3a, TableId::T3b,
                       TableId::T4a, TableId::T4b}) {
        std::string detail = "string-exact at printed decimals";
        double mismatches = 0.0;
        bool pass = false;
        try {
            const TableFixture fx = load_fixture(dir, id);
            const auto diffs = compare_table(reproduce_table(table_spec(id)), fx);
            mismatches = static_cast<double>(diffs.size());
            pass = diffs.empty();
            if (!pass) detail = diffs.front();

            // Smallest-term truncation must land on a row the table marks,
            // whenever the column has marked rows at all.
            const EvalPoint pt(table_spec(id).params, table_spec(id).n);
            for (Variant v : {Variant::E4, Variant::E5}) {
                bool any_marked = false;
                bool star_marked = false;
                const Truncation t = optimal_truncation(pt, v, 10);
                for (const FixtureRow& row : fx.rows) {
                    const bool marked = (v == Variant::E4) ? row.marked_e4 : row.marked_e5;
                    if (!marked) continue;
                    any_marked = true;
                    if (row.M == t.m_star) star_marked = true;
                }
                if (any_marked && !star_marked) {
                    pass = false;
                    mismatches += 1.0;
                    detail = std::string("truncation M*=") + std::to_string(t.m_star) +
                             " not among marked rows (" +
                             (v == Variant::E4 ? "e4" : "e5") + ")";
                }
            }
        } catch (const std::exception& e) {
            detail = e.what();
            mismatches = 1.0;
        }
        report.checks.push_back({std::string("table_") + table_id_name(id), 0.0,
                                 mismatches, pass, detail});
    }
}

}  // namespace

SuiteReport run_suite(Suite which) {
    SuiteReport report;
    if (which == Suite::Oracle || which == Suite::All) run_oracle_checks(report);
    if (which == Suite::Decay || which == Suite::All) run_decay_checks(report);
    if (which == Suite::Limit || which == Suite::All) run_limit_checks(report);
    if (which == Suite::Tables || which == Suite::All) run_table_checks(report);
    return report;
}

}  // namespace gratio
