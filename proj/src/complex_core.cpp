#include "lerchsum/complex_core.hpp"

#include <array>
#include <cmath>
#include <string>

#include "lerchsum/error.hpp"

namespace lerchsum {

namespace {

constexpr double kIntegerExponentTol = 1e-12;
constexpr double kMaxFastExponent = 64.0;
constexpr double kPoleTol = 1e-12;

constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

const double kHalfLogTwoPi = 0.5 * std::log(2.0 * kPi);
const double kLogPi = std::log(kPi);

Complex integer_power(Complex z, long n) {
  const bool invert = n < 0;
  unsigned long e = static_cast<unsigned long>(invert ? -n : n);
  Complex result{1.0, 0.0};
  Complex base = z;
  while (e != 0) {
    if (e & 1UL) result *= base;
    base *= base;
    e >>= 1;
  }
  return invert ? Complex{1.0, 0.0} / result : result;
}

// log sin(pi s) modulo 2 pi i, stable for large |Im s|.
Complex log_sin_pi(Complex s) {
  const double n = std::round(s.real());
  const Complex r{s.real() - n, s.imag()};
  // sin(pi (r + n)) = (-1)^n sin(pi r)
  const Complex sign_log = std::fmod(std::fabs(n), 2.0) == 1.0 ? Complex{0.0, kPi} : Complex{};
  const Complex w = kPi * r;
  const Complex i{0.0, 1.0};
  if (std::fabs(w.imag()) < 20.0) return std::log(std::sin(w)) + sign_log;
  if (w.imag() > 0.0) {
    // sin w = (i/2) e^{-iw} (1 - e^{2iw})
    return -i * w + std::log(1.0 - std::exp(2.0 * i * w)) + std::log(Complex{0.0, 0.5}) + sign_log;
  }
  // sin w = (1/2i) e^{iw} (1 - e^{-2iw})
  return i * w + std::log(1.0 - std::exp(-2.0 * i * w)) - std::log(Complex{0.0, 2.0}) + sign_log;
}

Complex lanczos_log_gamma(Complex s) {
  const Complex z = s - 1.0;
  Complex series{kLanczos[0], 0.0};
  for (std::size_t k = 1; k < kLanczos.size(); ++k) series += kLanczos[k] / (z + static_cast<double>(k));
  const Complex t = z + kLanczosG + 0.5;
  return kHalfLogTwoPi + (z + 0.5) * std::log(t) - t + std::log(series);
}

// Asymptotic series; used once |s| >= 10, where the Lanczos form degrades
// with growing |Im s|.
constexpr double kStirlingRadius = 10.0;
constexpr std::array<double, 10> kBernoulli = {1.0 / 6.0,       -1.0 / 30.0,   1.0 / 42.0,        -1.0 / 30.0,
                                               5.0 / 66.0,      -691.0 / 2730.0, 7.0 / 6.0,       -3617.0 / 510.0,
                                               43867.0 / 798.0, -174611.0 / 330.0};

Complex stirling_log_gamma(Complex s) {
  Complex result = (s - 0.5) * std::log(s) - s + kHalfLogTwoPi;
  const Complex inv_sq = 1.0 / (s * s);
  Complex power = 1.0 / s;
  for (std::size_t k = 1; k <= kBernoulli.size(); ++k) {
    const double kk = static_cast<double>(k);
    result += kBernoulli[k - 1] / (2.0 * kk * (2.0 * kk - 1.0)) * power;
    power *= inv_sq;
  }
  return result;
}

Complex positive_log_gamma(Complex s) {
  return std::abs(s) >= kStirlingRadius ? stirling_log_gamma(s) : lanczos_log_gamma(s);
}

}  // namespace

bool is_finite(Complex z) noexcept { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_finite(Complex z, const char* what) {
  if (!is_finite(z)) throw Error(ErrorKind::domain, std::string(what) + " is not finite");
}

Complex principal_log(Complex z) {
  require_finite(z, "log argument");
  if (z == Complex{}) throw Error(ErrorKind::domain, "log of zero");
  const double modulus = std::log(std::hypot(z.real(), z.imag()));
  if (z.imag() == 0.0) return {modulus, z.real() < 0.0 ? kPi : 0.0};
  return {modulus, std::atan2(z.imag(), z.real())};
}

Complex complex_pow(Complex z, Complex w) {
  require_finite(z, "power base");
  require_finite(w, "power exponent");
  const double rounded = std::round(w.real());
  const bool integral = std::abs(w - Complex{rounded, 0.0}) < kIntegerExponentTol &&
                        std::fabs(rounded) <= kMaxFastExponent;
  if (z == Complex{}) {
    if (w.real() > 0.0) return {};
    throw Error(ErrorKind::domain, "0^w requires Re(w) > 0");
  }
  if (integral) return integer_power(z, static_cast<long>(rounded));
  const Complex result = std::exp(w * principal_log(z));
  if (!is_finite(result)) throw Error(ErrorKind::domain, "complex_pow overflow");
  return result;
}

Complex sin_pi(Complex s) {
  const double n = std::round(s.real());
  const Complex r = std::sin(kPi * Complex{s.real() - n, s.imag()});
  return std::fmod(std::fabs(n), 2.0) == 1.0 ? -r : r;
}

double distance_to_nonpositive_integer(Complex v) noexcept {
  const double nearest = std::min(0.0, std::round(v.real()));
  return std::abs(v - Complex{nearest, 0.0});
}

Complex log_gamma(Complex s) {
  require_finite(s, "log_gamma argument");
  if (distance_to_nonpositive_integer(s) < kPoleTol)
    throw Error(ErrorKind::pole, "log_gamma pole at non-positive integer");
  if (s.real() < 0.5) return kLogPi - log_sin_pi(s) - positive_log_gamma(1.0 - s);
  return positive_log_gamma(s);
}

}  // namespace lerchsum
