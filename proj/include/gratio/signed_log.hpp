#pragma once

#include <cmath>
#include <limits>

namespace gratio {

// A real number stored as (sign, ln|value|) so that products and ratios of
// gamma-scale magnitudes never overflow or underflow.  sign == 0 means the
// represented value is exactly zero and log_mag is ignored.
struct SignedLogValue {
    int sign = 0;
    double log_mag = -std::numeric_limits<double>::infinity();

    static SignedLogValue zero() { return {}; }
    static SignedLogValue one() { return {1, 0.0}; }

    static SignedLogValue from_real(double v) {
        if (v == 0.0) return zero();
        return {v > 0.0 ? 1 : -1, std::log(std::fabs(v))};
    }

    double to_real() const {
        if (sign == 0) return 0.0;
        return static_cast<double>(sign) * std::exp(log_mag);
    }

    bool is_zero() const { return sign == 0; }

    SignedLogValue& operator*=(const SignedLogValue& o) {
        if (sign == 0 || o.sign == 0) {
            *this = zero();
            return *this;
        }
        sign *= o.sign;
        log_mag += o.log_mag;
        return *this;
    }

    // Caller guarantees o.sign != 0.
    SignedLogValue& operator/=(const SignedLogValue& o) {
        if (sign == 0) return *this;
        sign *= o.sign;
        log_mag -= o.log_mag;
        return *this;
    }

    friend SignedLogValue operator*(SignedLogValue a, const SignedLogValue& b) {
        a *= b;
        return a;
    }
    friend SignedLogValue operator/(SignedLogValue a, const SignedLogValue& b) {
        a /= b;
        return a;
    }
};

// Addition in signed-log form (log-sum-exp with sign bookkeeping).
inline SignedLogValue add(const SignedLogValue& a, const SignedLogValue& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    const SignedLogValue& big = (a.log_mag >= b.log_mag) ? a : b;
    const SignedLogValue& small = (a.log_mag >= b.log_mag) ? b : a;
    const double r = std::exp(small.log_mag - big.log_mag);  // in (0, 1]
    const double t = (a.sign == b.sign) ? 1.0 + r : 1.0 - r;
    if (t == 0.0) return SignedLogValue::zero();
    SignedLogValue out;
    out.sign = big.sign;
    out.log_mag = big.log_mag + std::log(t);
    return out;
}

}  // namespace gratio
