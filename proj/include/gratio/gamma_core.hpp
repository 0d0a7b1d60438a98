#pragma once

#include <stdexcept>
#include <string>

#include "gratio/signed_log.hpp"

namespace gratio {

// x counts as a gamma pole iff round(x) <= 0 and |x - round(x)| < kPoleTol.
inline constexpr double kPoleTol = 1e-12;

struct PoleError : std::domain_error {
    double argument;
    explicit PoleError(double x, const std::string& context = "gamma argument");
};

struct ZeroDivisorError : std::domain_error {
    double factor;
    explicit ZeroDivisorError(double f);
};

bool is_gamma_pole(double x);

// sin(pi*x) computed after reducing x by its nearest integer, so the result
// keeps full accuracy for large |x|.  Exactly zero iff x is an integer.
double sin_pi(double x);

// sign(Gamma(x)) and ln|Gamma(x)|.  Negative non-integer arguments go
// through the reflection formula Gamma(x)Gamma(1-x) = pi/sin(pi x).
// Throws PoleError at (near-)non-positive-integer x.
SignedLogValue log_gamma_signed(double x);

// Rising factorial (x)_m = x(x+1)...(x+m-1) by direct multiplication.
// Exact zero (sign 0) when a factor vanishes; (x)_0 = 1.
SignedLogValue pochhammer(double x, int m);

// (x)_n extended to negative n via (x)_n = 1 / ((x+n)(x+n+1)...(x-1)).
// Throws ZeroDivisorError when a denominator factor is (near-)zero.
SignedLogValue pochhammer_signed_n(double x, int n);

}  // namespace gratio
