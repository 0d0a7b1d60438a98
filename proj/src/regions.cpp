#include "gratio/regions.hpp"

#include <cmath>

namespace gratio {

namespace {

constexpr double kBoundaryTol = 1e-12;

bool near_integer(double x) {
    return std::fabs(x - std::round(x)) < kBoundaryTol;
}

}  // namespace

double transition_line_e4(const ParamSet& p) { return 1.0 - p.c; }

double transition_line_e5(const ParamSet& p) { return 1.0 + p.c - p.a - p.b; }

RegionReport classify(const EvalPoint& pt, Variant variant) {
    const auto& p = pt.params;
    RegionReport report{};
    report.variant = variant;
    report.transition_n = (variant == Variant::E4) ? transition_line_e4(p)
                                                   : transition_line_e5(p);
    report.degenerate_coincidence =
        near_integer(p.c - p.a) || near_integer(p.c - p.b);

    if (std::fabs(pt.n - report.transition_n) < kBoundaryTol) {
        report.expansion_valid = true;
        report.series_convergent = false;
        report.represented_value = Represented::Boundary;
    } else if (pt.n > report.transition_n) {
        report.expansion_valid = true;
        report.series_convergent = false;
        report.represented_value = Represented::LhsRatio;
    } else {
        report.expansion_valid = false;
        report.series_convergent = true;
        report.represented_value = Represented::Eq6Limit;
    }
    return report;
}

}  // namespace gratio
