#pragma once

#include <cstdint>
#include <string_view>

#include "lerchsum/complex_core.hpp"

namespace lerchsum {

// Phi(z, s, v) = sum_{j>=0} (v + j)^{-s} z^j, continued to |z| <= 1 by
//   Phi(z, s, v) = 1/Gamma(s) * int_0^inf t^{s-1} e^{-(v-1)t} / (e^t - z) dt
// for Re(v) > 0 and either (|z| <= 1, z != 1, Re(s) > 0) or (z = 1, Re(s) > 1).

struct LerchParams {
  Complex z;
  Complex s;
  Complex v;
};

enum class Method { series, integral, shifted_integral };

std::string_view to_string(Method method) noexcept;

struct EvalResult {
  Complex value;
  double abs_error_estimate = 0.0;
  std::int64_t work = 0;  // series terms or quadrature nodes
  Method method = Method::series;
};

struct ShiftResult {
  LerchParams shifted;
  Complex multiplier;
  Complex correction;
};

inline constexpr double kPoleTolerance = 1e-12;
inline constexpr double kUnitCircleTolerance = 1e-12;
inline constexpr double kDispatchRadius = 0.75;
inline constexpr std::int64_t kSeriesTermCap = 1'000'000;
inline constexpr std::int64_t kSeriesDispatchBudget = 100'000;
inline constexpr std::int64_t kQuadratureNodeCap = 200'000;

/// Partial sums of the defining series. Requires |z| < 1 - 1e-12.
/// Stops once |term_N| |z| / (1 - |z|) (1 + |s| / N) < tol; that bound plus
/// a floating-point rounding term is reported as the error estimate.
EvalResult lerch_phi_series(const LerchParams& p, double tol);

/// Phi(z,s,v) = multiplier * Phi(z,s,v+steps) + correction.
ShiftResult shift_v(const LerchParams& p, int steps);

/// Double-exponential quadrature of the integral representation over
/// (0,1] and [1,inf). Requires the integral representation's domain.
EvalResult lerch_phi_integral(const LerchParams& p, double tol);

/// shift_v up to Re(v) >= 1, integrate, reconstruct.
EvalResult lerch_phi_shifted_integral(const LerchParams& p, double tol);

/// Strategy dispatch:
///   |z| <= 0.75                          series
///   0.75 < |z| < 1                       series if reachable in 1e5 terms,
///                                        otherwise shifted integral
///   |z| = 1, z != 1, Re(s) > 0           shifted integral
///   z = 1, Re(s) > 1                     integral (shifted if Re(v) < 1)
EvalResult lerch_phi(const LerchParams& p, double tol);

/// zeta(s, v) = Phi(1, s, v), Re(s) > 1.
EvalResult hurwitz_zeta(Complex s, Complex v, double tol);

/// Li_s(z) = z Phi(z, s, 1); |z| < 1, or |z| = 1 with z != 1 and Re(s) > 1.
EvalResult polylog(Complex s, Complex z, double tol);

}  // namespace lerchsum
