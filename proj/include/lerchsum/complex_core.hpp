#pragma once

#include <complex>

namespace lerchsum {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.141592653589793238462643383279502884;

bool is_finite(Complex z) noexcept;

// Throws a domain Error if either component is NaN or infinite.
void require_finite(Complex z, const char* what);

/// Principal logarithm, Im in (-pi, pi]. A negative real argument maps to
/// +i*pi regardless of the sign of its zero imaginary part.
Complex principal_log(Complex z);

/// Principal power exp(w * Log z).
///
/// Exponents within 1e-12 of an integer of magnitude <= 64 are evaluated by
/// repeated multiplication, so e.g. (-1)^2 is exactly 1. 0^w is 0 for
/// Re(w) > 0 and a domain error otherwise.
Complex complex_pow(Complex z, Complex w);

/// log Gamma(s) via a g = 7, 9-term Lanczos sum, with reflection for
/// Re(s) < 1/2. The result is a logarithm of Gamma(s) but not necessarily
/// the branch continuous in s; only exp(log_gamma(s)) is meaningful.
Complex log_gamma(Complex s);

/// sin(pi * s) with the argument reduced by the nearest integer first.
Complex sin_pi(Complex s);

/// Distance from v to the nearest non-positive integer.
double distance_to_nonpositive_integer(Complex v) noexcept;

}  // namespace lerchsum
