#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lerchsum/complex_core.hpp"

namespace lerchsum {

// Parameters of the prime-indexed roots-of-unity sum.
struct TheoremParams {
  Complex k;
  Complex a;
  Complex m;
  std::int64_t n = 0;
  std::int64_t q = 0;
};

enum class ValidationMode { strict, permissive };

struct ValidationReport {
  bool valid = true;
  // n = 2 is prime but the tangent-sum reduction only holds for odd n.
  bool known_suspect = false;
  std::vector<std::string> violations;
  std::vector<std::string> warnings;
};

/// Deterministic Miller-Rabin, exact for every 64-bit input.
bool is_prime(std::uint64_t n) noexcept;

/// Conditions on the index pair (n, q) shared by every identity:
/// n an odd prime, q >= 1, q mod n != 0. In permissive mode the q mod n
/// condition and the n = 2 restriction become warnings.
ValidationReport validate_index_pair(std::int64_t n, std::int64_t q, ValidationMode mode);

/// Index-pair conditions plus Im(m) > 0 (downgraded in permissive mode),
/// a != 0, log^k(a) well defined, and both Lerch shifts off the pole set.
ValidationReport validate_theorem_params(const TheoremParams& p, ValidationMode mode);

}  // namespace lerchsum
