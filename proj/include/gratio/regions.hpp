#pragma once

#include "gratio/expansion.hpp"

namespace gratio {

enum class Represented { LhsRatio, Eq6Limit, Boundary };

struct RegionReport {
    Variant variant;
    bool series_convergent;
    bool expansion_valid;
    double transition_n;
    Represented represented_value;
    // True when c-a or c-b sits on an integer, where the convergent-region
    // limit can coincide with the left-hand-side ratio.
    bool degenerate_coincidence;
};

// Critical Re(n) below which the first normalized series converges: 1 - c.
double transition_line_e4(const ParamSet& p);

// Critical Re(n) for the substituted series: 1 + c - a - b.
double transition_line_e5(const ParamSet& p);

RegionReport classify(const EvalPoint& pt, Variant variant);

}  // namespace gratio
