#include "lerchsum/numtheory.hpp"

#include <array>
#include <cmath>

#include "lerchsum/lerch.hpp"

namespace lerchsum {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mul_mod(u64 a, u64 b, u64 m) { return static_cast<u64>(static_cast<u128>(a) * b % m); }

u64 pow_mod(u64 base, u64 exp, u64 m) {
  u64 result = 1;
  base %= m;
  while (exp != 0) {
    if (exp & 1) result = mul_mod(result, base, m);
    base = mul_mod(base, base, m);
    exp >>= 1;
  }
  return result;
}

void flag(ValidationReport& report, bool hard, std::string message) {
  if (hard) {
    report.valid = false;
    report.violations.push_back(std::move(message));
  } else {
    report.warnings.push_back(std::move(message));
  }
}

bool is_integer_valued(Complex k) { return k.imag() == 0.0 && std::round(k.real()) == k.real(); }

}  // namespace

bool is_prime(std::uint64_t n) noexcept {
  if (n < 2) return false;
  constexpr std::array<u64, 12> kWitnesses = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};
  for (u64 p : kWitnesses) {
    if (n % p == 0) return n == p;
  }
  u64 d = n - 1;
  int r = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++r;
  }
  for (u64 a : kWitnesses) {
    u64 x = pow_mod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < r; ++i) {
      x = mul_mod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

ValidationReport validate_index_pair(std::int64_t n, std::int64_t q, ValidationMode mode) {
  const bool strict = mode == ValidationMode::strict;
  ValidationReport report;
  if (n < 1 || !is_prime(static_cast<std::uint64_t>(n))) {
    flag(report, true, "n not prime");
  } else if (n == 2) {
    report.known_suspect = true;
    flag(report, strict, "n = 2 is a known-suspect case (odd primes only)");
  }
  if (q < 1) {
    flag(report, true, "q must be a positive integer");
  } else if (n >= 1 && q % n == 0) {
    flag(report, strict, "q is divisible by n (roots-of-unity factors collapse)");
  }
  return report;
}

ValidationReport validate_theorem_params(const TheoremParams& p, ValidationMode mode) {
  const bool strict = mode == ValidationMode::strict;
  ValidationReport report = validate_index_pair(p.n, p.q, mode);
  if (!is_finite(p.k) || !is_finite(p.a) || !is_finite(p.m)) {
    flag(report, true, "non-finite parameter");
    return report;
  }
  if (!(p.m.imag() > 0.0)) flag(report, strict, "Im(m) must be positive for the sums to converge");
  if (p.a == Complex{}) {
    flag(report, true, "a must be non-zero");
    return report;
  }
  const Complex log_a = principal_log(p.a);
  if (log_a == Complex{} && (!is_integer_valued(p.k) || p.k.real() < 0.0))
    flag(report, true, "log^k(a) is singular: Log(a) = 0 with non-integer or negative k");
  const Complex i{0.0, 1.0};
  if (distance_to_nonpositive_integer(1.0 - 0.5 * i * log_a) < kPoleTolerance)
    flag(report, true, "1 - (i/2) Log(a) is a pole of Phi");
  if (p.n >= 1 &&
      distance_to_nonpositive_integer(1.0 - i * log_a / (2.0 * static_cast<double>(p.n))) < kPoleTolerance)
    flag(report, true, "1 - i Log(a) / (2n) is a pole of Phi");
  return report;
}

}  // namespace lerchsum
