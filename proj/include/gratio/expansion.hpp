#pragma once

#include <stdexcept>
#include <vector>

#include "gratio/gamma_core.hpp"
#include "gratio/signed_log.hpp"

namespace gratio {

// The parameter triple (a, b, c) together with the derived d = a + b - c.
struct ParamSet {
    double a;
    double b;
    double c;
    double d;

    ParamSet(double a_, double b_, double c_);
};

// A parameter set plus the large parameter n (real, not necessarily integer).
struct EvalPoint {
    ParamSet params;
    double n;

    EvalPoint(const ParamSet& p, double n_);
};

enum class Variant { E4, E5 };

struct TermPoleError : std::domain_error {
    int term_index;
    explicit TermPoleError(int m);
};

struct SineZeroError : std::domain_error {
    double argument;
    explicit SineZeroError(double x);
};

struct PartialSumResult {
    double value = 0.0;
    std::vector<double> terms;     // terms[0] is the leading 1
    int truncation_order = 0;      // M
    int smallest_term_index = 0;   // argmin over m >= 1 of |term_m|; 0 when M == 0
    bool diverging_tail = false;   // |term_M| > |term_{M-1}|
};

// Gamma(a+n)Gamma(b+n) / (Gamma(c+n)Gamma(d+n)), evaluated in signed-log form.
double exact_ratio(const EvalPoint& pt);

// 1 + sum_{m=1..M} (c-a)_m (c-b)_m / (m! (1+c-a-b-n)_m)
PartialSumResult partial_sum_e4(const EvalPoint& pt, int M);

// 1 + sum_{m=1..M} (a-c)_m (b-c)_m / (m! (1-c-n)_m); the c -> a+b-c image of
// the first form, evaluated through the same code path.
PartialSumResult partial_sum_e5(const EvalPoint& pt, int M);

// sum_{m=0..M} (-1)^m (c-a)_m (c-b)_m / m! * Gamma(a+b-c-m+n), kept in
// signed-log form; divide by Gamma(d+n) to compare with the normalized sums.
SignedLogValue partial_sum_e3(const EvalPoint& pt, int M);

// exact_ratio scaled by sin(pi[a+n])sin(pi[b+n]) / (sin(pi[c+n])sin(pi[d+n])):
// the value the series converge to in the convergent half-plane.
double gauss_limit_e6(const EvalPoint& pt);

struct Truncation {
    int m_star;
    double value;
};

// Smallest-term truncation: stop just before the smallest term in magnitude,
// so the first omitted term (the standard error estimate) is minimal.
Truncation optimal_truncation(const EvalPoint& pt, Variant variant, int m_max);

}  // namespace gratio
