#include <cmath>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gratio/expansion.hpp"
#include "gratio/regions.hpp"
#include "gratio/verify.hpp"

namespace {

using namespace gratio;

enum ExitCode {
    kOk = 0,
    kUsage = 1,
    kDomainError = 2,
    kFixtureMismatch = 3,
    kVerifyFailure = 4,
};

// ---------------------------------------------------------------------------
// Flat output records rendered as text, json or csv.  Numbers carry 17
// significant digits in the machine formats so they round-trip exactly.

struct Field {
    enum Kind { Str, Num, Bool, Int } kind;
    std::string name;
    std::string s;
    double d = 0.0;
    long long i = 0;
    bool b = false;
};

struct Record {
    std::vector<Field> fields;

    void add_str(const std::string& name, const std::string& v) {
        fields.push_back({Field::Str, name, v});
    }
    void add_num(const std::string& name, double v) {
        Field f{Field::Num, name};
        f.d = v;
        fields.push_back(f);
    }
    void add_int(const std::string& name, long long v) {
        Field f{Field::Int, name};
        f.i = v;
        fields.push_back(f);
    }
    void add_bool(const std::string& name, bool v) {
        Field f{Field::Bool, name};
        f.b = v;
        fields.push_back(f);
    }
};

std::string num17(double v) {
    if (!std::isfinite(v)) return "null";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string json_escape(const std::string& s) {
    std::string out;
    for (char ch : s) {
        if (ch == '"' || ch == '\\') out.push_back('\\');
        out.push_back(ch);
    }
    return out;
}

std::string field_machine_value(const Field& f) {
    switch (f.kind) {
        case Field::Str: return "\"" + json_escape(f.s) + "\"";
        case Field::Num: return num17(f.d);
        case Field::Int: return std::to_string(f.i);
        case Field::Bool: return f.b ? "true" : "false";
    }
    return "null";
}

std::string field_csv_value(const Field& f) {
    if (f.kind == Field::Str) return f.s;
    return field_machine_value(f);
}

// Text mode prints values at table-native precision (7 decimals).
std::string field_text_value(const Field& f) {
    switch (f.kind) {
        case Field::Str: return f.s;
        case Field::Num: return format_fixed(f.d, 7);
        case Field::Int: return std::to_string(f.i);
        case Field::Bool: return f.b ? "true" : "false";
    }
    return "";
}

void render_json(const std::vector<Record>& records, bool as_array, std::ostream& os) {
    auto emit_one = [&os](const Record& r) {
        os << "{";
        for (size_t i = 0; i < r.fields.size(); ++i) {
            if (i) os << ",";
            os << "\"" << r.fields[i].name << "\":" << field_machine_value(r.fields[i]);
        }
        os << "}";
    };
    if (!as_array) {
        emit_one(records.front());
        os << "\n";
        return;
    }
    os << "[";
    for (size_t i = 0; i < records.size(); ++i) {
        if (i) os << ",";
        os << "\n";
        emit_one(records[i]);
    }
    os << "\n]\n";
}

void render_csv(const std::vector<Record>& records, std::ostream& os) {
    if (records.empty()) return;
    for (size_t i = 0; i < records.front().fields.size(); ++i) {
        if (i) os << ",";
        os << records.front().fields[i].name;
    }
    os << "\n";
    for (const Record& r : records) {
        for (size_t i = 0; i < r.fields.size(); ++i) {
            if (i) os << ",";
            os << field_csv_value(r.fields[i]);
        }
        os << "\n";
    }
}

void render_text(const std::vector<Record>& records, std::ostream& os) {
    for (const Record& r : records) {
        for (const Field& f : r.fields) {
            os << f.name << ": " << field_text_value(f) << "\n";
        }
        os << "\n";
    }
}

void render(const std::vector<Record>& records, const std::string& format,
            bool single, std::ostream& os = std::cout) {
    if (format == "json") {
        render_json(records, !single, os);
    } else if (format == "csv") {
        render_csv(records, os);
    } else {
        render_text(records, os);
    }
}

int emit_domain_error(const std::exception& e, const std::string& format) {
    Record r;
    r.add_str("error", e.what());
    render({r}, format, true, std::cerr);
    return kDomainError;
}

void add_region_fields(Record& rec, const EvalPoint& pt, Variant v,
                       const std::string& suffix) {
    const RegionReport rep = classify(pt, v);
    rec.add_bool("convergent" + suffix, rep.series_convergent);
    rec.add_bool("valid" + suffix, rep.expansion_valid);
    rec.add_num("transition_n" + suffix, rep.transition_n);
    const char* represented = rep.represented_value == Represented::LhsRatio
                                  ? "lhs_ratio"
                                  : rep.represented_value == Represented::Eq6Limit
                                        ? "eq6_limit"
                                        : "boundary";
    rec.add_str("represents" + suffix, represented);
    rec.add_bool("degenerate_coincidence" + suffix, rep.degenerate_coincidence);
}

// ---------------------------------------------------------------------------
// eval

int cmd_eval(double a, double b, double c, double n, int M,
             const std::string& variant, const std::string& format) {
    try {
        const EvalPoint pt(ParamSet(a, b, c), n);
        Record rec;
        rec.add_num("a", a);
        rec.add_num("b", b);
        rec.add_num("c", c);
        rec.add_num("n", n);
        rec.add_int("M", M);
        rec.add_str("variant", variant);
        rec.add_num("exact", exact_ratio(pt));

        std::optional<PartialSumResult> primary;
        if (variant == "e4" || variant == "both") {
            const PartialSumResult r = partial_sum_e4(pt, M);
            rec.add_num("e4", r.value);
            primary = r;
        }
        if (variant == "e5" || variant == "both") {
            const PartialSumResult r = partial_sum_e5(pt, M);
            rec.add_num("e5", r.value);
            if (!primary) primary = r;
        }
        try {
            rec.add_num("eq6", gauss_limit_e6(pt));
        } catch (const SineZeroError&) {
            // eq6 undefined at integer c+n or d+n; omit the field
        }
        add_region_fields(rec, pt, Variant::E4, "_e4");
        add_region_fields(rec, pt, Variant::E5, "_e5");
        rec.add_int("smallest_term_index", primary->smallest_term_index);
        rec.add_bool("diverging_tail", primary->diverging_tail);
        render({rec}, format, true);
        return kOk;
    } catch (const std::domain_error& e) {
        return emit_domain_error(e, format);
    }
}

// ---------------------------------------------------------------------------
// classify

int cmd_classify(double a, double b, double c, double n, const std::string& format) {
    const EvalPoint pt(ParamSet(a, b, c), n);
    Record rec;
    rec.add_num("a", a);
    rec.add_num("b", b);
    rec.add_num("c", c);
    rec.add_num("n", n);
    add_region_fields(rec, pt, Variant::E4, "_e4");
    add_region_fields(rec, pt, Variant::E5, "_e5");
    render({rec}, format, true);
    return kOk;
}

// ---------------------------------------------------------------------------
// table

int run_one_table(TableId id, const std::string& format,
                  std::vector<std::string>& diffs) {
    const TableSpec spec = table_spec(id);
    const TableReproduction repro = reproduce_table(spec);
    const TableFixture fx = load_fixture(fixture_dir(), id);

    if (format == "text") {
        std::printf("table %s  (a=%g, b=%g, c=%g, n=%g)\n", table_id_name(id),
                    spec.params.a, spec.params.b, spec.params.c, spec.n);
        std::printf("%3s  %*s  %*s\n", "M", spec.printed_decimals + 4, "rhs(4)",
                    spec.printed_decimals + 4, "rhs(5)");
        for (const TableRow& row : repro.rows) {
            std::printf("%3d  %*s  %*s\n", row.M, spec.printed_decimals + 4,
                        format_fixed(row.rhs_e4, spec.printed_decimals).c_str(),
                        spec.printed_decimals + 4,
                        format_fixed(row.rhs_e5, spec.printed_decimals).c_str());
        }
        std::printf("exact: %s\n", format_fixed(repro.exact_lhs, 8).c_str());
        if (repro.exact_eq6) {
            std::printf("eq6:   %s\n", format_fixed(*repro.exact_eq6, 8).c_str());
        }
        std::printf("\n");
    } else {
        std::vector<Record> rows;
        for (size_t i = 0; i < repro.rows.size(); ++i) {
            const TableRow& row = repro.rows[i];
            Record rec;
            rec.add_str("table", table_id_name(id));
            rec.add_int("M", row.M);
            rec.add_num("rhs_e4", row.rhs_e4);
            rec.add_num("rhs_e5", row.rhs_e5);
            rec.add_bool("marked_e4", fx.rows[i].marked_e4);
            rec.add_bool("marked_e5", fx.rows[i].marked_e5);
            rows.push_back(rec);
        }
        render(rows, format, false);
    }

    for (const std::string& d : compare_table(repro, fx)) {
        diffs.push_back(std::string(table_id_name(id)) + " " + d);
    }
    return kOk;
}

int cmd_table(const std::string& id_str, const std::string& format) {
    std::vector<TableId> ids;
    if (id_str == "all") {
        ids = {TableId::T1, TableId::T2, TableId::T3a,
               TableId::T3b, TableId::T4a, TableId::T4b};
    } else if (auto id = parse_table_id(id_str)) {
        ids = {*id};
    } else {
        std::cerr << "unknown table id: " << id_str << "\n";
        return kUsage;
    }
    std::vector<std::string> diffs;
    for (TableId id : ids) run_one_table(id, format, diffs);
    if (!diffs.empty()) {
        for (const std::string& d : diffs) std::cerr << "MISMATCH " << d << "\n";
        return kFixtureMismatch;
    }
    return kOk;
}

// ---------------------------------------------------------------------------
// scan

int cmd_scan(double a, double b, double c, double n_min, double n_max,
             double n_step, int M, const std::string& variant,
             const std::string& format) {
    const ParamSet params(a, b, c);
    const Variant v = (variant == "e5") ? Variant::E5 : Variant::E4;
    std::vector<Record> records;
    // half-step slack so n_max itself is included despite rounding
    for (double n = n_min; n <= n_max + 0.5 * n_step; n += n_step) {
        const EvalPoint pt(params, n);
        Record rec;
        rec.add_num("a", a);
        rec.add_num("b", b);
        rec.add_num("c", c);
        rec.add_num("n", n);
        rec.add_int("M", M);
        rec.add_str("variant", variant);
        // uniform field set either way, so csv rows stay aligned
        try {
            const double exact = exact_ratio(pt);
            const PartialSumResult sum =
                (v == Variant::E4) ? partial_sum_e4(pt, M) : partial_sum_e5(pt, M);
            rec.add_num("exact", exact);
            rec.add_num("sum", sum.value);
            rec.add_num("abs_error", std::fabs(sum.value - exact));
            add_region_fields(rec, pt, v, "");
            rec.add_int("smallest_term_index", sum.smallest_term_index);
            rec.add_bool("diverging_tail", sum.diverging_tail);
            rec.add_bool("skipped", false);
            rec.add_str("error", "");
        } catch (const std::domain_error& e) {
            const double nan = std::nan("");
            rec.add_num("exact", nan);
            rec.add_num("sum", nan);
            rec.add_num("abs_error", nan);
            add_region_fields(rec, pt, v, "");
            rec.add_int("smallest_term_index", 0);
            rec.add_bool("diverging_tail", false);
            rec.add_bool("skipped", true);
            rec.add_str("error", e.what());
        }
        records.push_back(rec);
    }
    render(records, format, false);
    return kOk;
}

// ---------------------------------------------------------------------------
// verify

int cmd_verify(const std::string& which_str, const std::string& format) {
    const auto which = parse_suite(which_str);
    if (!which) {
        std::cerr << "unknown suite: " << which_str << "\n";
        return kUsage;
    }
    const SuiteReport report = run_suite(*which);
    if (format == "text") {
        for (const CheckResult& c : report.checks) {
            std::printf("%s  %-45s tol=%-10.3g observed=%-12.5g %s\n",
                        c.pass ? "PASS" : "FAIL", c.name.c_str(), c.tolerance,
                        c.observed, c.detail.c_str());
        }
        std::printf("%zu checks, %s\n", report.checks.size(),
                    report.all_pass() ? "all passed" : "FAILURES present");
    } else {
        std::vector<Record> records;
        for (const CheckResult& c : report.checks) {
            Record rec;
            rec.add_str("name", c.name);
            rec.add_num("tolerance", c.tolerance);
            rec.add_num("observed", c.observed);
            rec.add_bool("pass", c.pass);
            rec.add_str("detail", c.detail);
            records.push_back(rec);
        }
        render(records, format, false);
    }
    return report.all_pass() ? kOk : kVerifyFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gratio: gamma-function ratio, its large-n expansions and "
                 "the published reference tables"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();

    double a = 0, b = 0, c = 0, n = 0;
    int M = 10;
    std::string variant = "both";

    auto* eval = app.add_subcommand("eval", "evaluate the ratio and its partial sums");
    eval->add_option("-a", a)->required();
    eval->add_option("-b", b)->required();
    eval->add_option("-c", c)->required();
    eval->add_option("-n", n)->required();
    eval->add_option("-M", M)->check(CLI::NonNegativeNumber);
    eval->add_option("--variant", variant)->check(CLI::IsMember({"e4", "e5", "both"}));

    auto* classify_cmd = app.add_subcommand("classify", "convergence/validity half-planes");
    classify_cmd->add_option("-a", a)->required();
    classify_cmd->add_option("-b", b)->required();
    classify_cmd->add_option("-c", c)->required();
    classify_cmd->add_option("-n", n)->required();

    std::string table_id = "all";
    auto* table = app.add_subcommand("table", "reproduce a reference table and diff the fixture");
    table->add_option("id", table_id, "T1, T2, T3a, T3b, T4a, T4b or all");

    double n_min = 0, n_max = 0, n_step = 1;
    std::string scan_variant = "e4";
    auto* scan = app.add_subcommand("scan", "evaluate over a range of n");
    scan->add_option("-a", a)->required();
    scan->add_option("-b", b)->required();
    scan->add_option("-c", c)->required();
    scan->add_option("--n-min", n_min)->required();
    scan->add_option("--n-max", n_max)->required();
    scan->add_option("--n-step", n_step)->check(CLI::PositiveNumber);
    scan->add_option("-M", M)->check(CLI::NonNegativeNumber);
    scan->add_option("--variant", scan_variant)->check(CLI::IsMember({"e4", "e5"}));

    std::string suite = "all";
    auto* verify = app.add_subcommand("verify", "run the verification suites");
    verify->add_option("which", suite, "oracle, decay, limit, tables or all");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    }

    try {
        if (eval->parsed()) return cmd_eval(a, b, c, n, M, variant, format);
        if (classify_cmd->parsed()) return cmd_classify(a, b, c, n, format);
        if (table->parsed()) return cmd_table(table_id, format);
        if (scan->parsed()) {
            if (n_min > n_max) {
                std::cerr << "--n-min must not exceed --n-max\n";
                return kUsage;
            }
            return cmd_scan(a, b, c, n_min, n_max, n_step, M, scan_variant, format);
        }
        if (verify->parsed()) return cmd_verify(suite, format);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kDomainError;
    }
    return kUsage;
}
