#include "gratio/expansion.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>

namespace gratio {

namespace {

std::string term_pole_message(int m) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "denominator Pochhammer vanishes at term m=%d", m);
    return buf;
}

std::string sine_zero_message(double x) {
    char buf[96];
    std::snprintf(buf, sizeof buf, "sin(pi * %.17g) vanishes", x);
    return buf;
}

// Shared evaluator for both normalized sums:
//   1 + sum_{m>=1} (p)_m (q)_m / (m! (r)_m)
// with incremental signed-log term updates.
PartialSumResult sum_with_numerators(double p, double q, double r, int M) {
    PartialSumResult out;
    out.truncation_order = M;
    out.terms.reserve(static_cast<size_t>(M) + 1);
    out.terms.push_back(1.0);
    out.value = 1.0;

    SignedLogValue term = SignedLogValue::one();
    double smallest_mag = std::numeric_limits<double>::infinity();
    for (int m = 1; m <= M; ++m) {
        const double denom_factor = r + (m - 1);
        if (std::fabs(denom_factor) < kPoleTol) throw TermPoleError(m);
        term *= SignedLogValue::from_real(p + (m - 1));
        term *= SignedLogValue::from_real(q + (m - 1));
        term /= SignedLogValue::from_real(static_cast<double>(m));
        term /= SignedLogValue::from_real(denom_factor);
        const double t = term.to_real();
        out.terms.push_back(t);
        out.value += t;
        if (std::fabs(t) < smallest_mag) {
            smallest_mag = std::fabs(t);
            out.smallest_term_index = m;
        }
    }
    if (M >= 1) {
        out.diverging_tail =
            std::fabs(out.terms[M]) > std::fabs(out.terms[M - 1]);
    }
    return out;
}

}  // namespace

ParamSet::ParamSet(double a_, double b_, double c_)
    : a(a_), b(b_), c(c_), d(a_ + b_ - c_) {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c)) {
        throw std::invalid_argument("ParamSet fields must be finite");
    }
}

EvalPoint::EvalPoint(const ParamSet& p, double n_) : params(p), n(n_) {
    if (!std::isfinite(n)) {
        throw std::invalid_argument("EvalPoint.n must be finite");
    }
}

TermPoleError::TermPoleError(int m)
    : std::domain_error(term_pole_message(m)), term_index(m) {}

SineZeroError::SineZeroError(double x)
    : std::domain_error(sine_zero_message(x)), argument(x) {}

double exact_ratio(const EvalPoint& pt) {
    const auto& p = pt.params;
    const double args[4] = {p.a + pt.n, p.b + pt.n, p.c + pt.n, p.d + pt.n};
    static const char* names[4] = {"a+n", "b+n", "c+n", "d+n"};
    for (int i = 0; i < 4; ++i) {
        if (is_gamma_pole(args[i])) throw PoleError(args[i], names[i]);
    }
    SignedLogValue ratio = log_gamma_signed(args[0]);
    ratio *= log_gamma_signed(args[1]);
    ratio /= log_gamma_signed(args[2]);
    ratio /= log_gamma_signed(args[3]);
    return ratio.to_real();
}

PartialSumResult partial_sum_e4(const EvalPoint& pt, int M) {
    const auto& p = pt.params;
    return sum_with_numerators(p.c - p.a, p.c - p.b, 1.0 - p.d - pt.n, M);
}

PartialSumResult partial_sum_e5(const EvalPoint& pt, int M) {
    // the c -> a+b-c substitution, evaluated through the first form's code
    // path so the identity e5(a,b,c) == e4(a,b,a+b-c) holds bit-for-bit
    const auto& p = pt.params;
    return partial_sum_e4({ParamSet(p.a, p.b, p.d), pt.n}, M);
}

SignedLogValue partial_sum_e3(const EvalPoint& pt, int M) {
    const auto& p = pt.params;
    SignedLogValue sum = SignedLogValue::zero();
    SignedLogValue coeff = SignedLogValue::one();  // (-1)^m (c-a)_m (c-b)_m / m!
    for (int m = 0; m <= M; ++m) {
        if (m > 0) {
            coeff *= SignedLogValue::from_real(-(p.c - p.a + (m - 1)));
            coeff *= SignedLogValue::from_real(p.c - p.b + (m - 1));
            coeff /= SignedLogValue::from_real(static_cast<double>(m));
        }
        const double gamma_arg = p.d - m + pt.n;
        if (is_gamma_pole(gamma_arg)) throw PoleError(gamma_arg, "a+b-c-m+n");
        sum = add(sum, coeff * log_gamma_signed(gamma_arg));
    }
    return sum;
}

double gauss_limit_e6(const EvalPoint& pt) {
    const auto& p = pt.params;
    const double ratio = exact_ratio(pt);
    const double denom_args[2] = {p.c + pt.n, p.d + pt.n};
    for (double x : denom_args) {
        if (std::fabs(x - std::round(x)) < kPoleTol) throw SineZeroError(x);
    }
    return ratio * sin_pi(p.a + pt.n) * sin_pi(p.b + pt.n) /
           (sin_pi(denom_args[0]) * sin_pi(denom_args[1]));
}

Truncation optimal_truncation(const EvalPoint& pt, Variant variant, int m_max) {
    const PartialSumResult sums = (variant == Variant::E4)
                                      ? partial_sum_e4(pt, m_max)
                                      : partial_sum_e5(pt, m_max);
    const int m_star = std::max(1, sums.smallest_term_index - 1);
    double value = 0.0;
    for (int m = 0; m <= m_star; ++m) value += sums.terms[m];
    return {m_star, value};
}

}  // namespace gratio
