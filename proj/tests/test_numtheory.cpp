#include <algorithm>
#include <string>

#include "doctest.h"
#include "lerchsum/numtheory.hpp"

using lerchsum::is_prime;
using lerchsum::TheoremParams;
using lerchsum::ValidationMode;

namespace {

bool trial_division(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

bool mentions(const std::vector<std::string>& items, std::string_view needle) {
  return std::any_of(items.begin(), items.end(),
                     [&](const std::string& s) { return s.find(needle) != std::string::npos; });
}

const TheoremParams kBase{1.0, 2.0, {0.3, 0.5}, 5, 2};

}  // namespace

TEST_CASE("is_prime examples") {
  CHECK(is_prime(7));
  CHECK_FALSE(is_prime(1));
  CHECK_FALSE(is_prime(0));
  CHECK(is_prime(2));
  CHECK(is_prime(2147483647ULL));
}

TEST_CASE("is_prime agrees with trial division up to 1e5") {
  for (std::uint64_t n = 0; n <= 100000; ++n) REQUIRE(is_prime(n) == trial_division(n));
}

TEST_CASE("is_prime on large inputs") {
  CHECK(is_prime(1000000007ULL));
  CHECK(is_prime(2305843009213693951ULL));   // 2^61 - 1
  CHECK(is_prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(is_prime(3215031751ULL));      // strong pseudoprime to bases 2, 3, 5, 7
  CHECK_FALSE(is_prime(3825123056546413051ULL));
  CHECK_FALSE(is_prime(4759123141ULL));         // strong pseudoprime to bases 2, 7, 61
  CHECK_FALSE(is_prime(2147483647ULL * 2147483629ULL));
  CHECK_FALSE(is_prime(18446744073709551615ULL));
}

TEST_CASE("validate_theorem_params examples") {
  const auto ok = lerchsum::validate_theorem_params(kBase, ValidationMode::strict);
  CHECK(ok.valid);
  CHECK(ok.violations.empty());

  TheoremParams composite = kBase;
  composite.n = 6;
  composite.q = 1;
  const auto bad_n = lerchsum::validate_theorem_params(composite, ValidationMode::strict);
  CHECK_FALSE(bad_n.valid);
  CHECK(mentions(bad_n.violations, "n not prime"));

  TheoremParams collapse = kBase;
  collapse.n = 3;
  collapse.q = 3;
  const auto bad_q = lerchsum::validate_theorem_params(collapse, ValidationMode::strict);
  CHECK_FALSE(bad_q.valid);
  CHECK(mentions(bad_q.violations, "divisible by n"));
}

TEST_CASE("q multiples of n are rejected, not just q == n") {
  TheoremParams p = kBase;
  p.q = 10;
  CHECK_FALSE(lerchsum::validate_theorem_params(p, ValidationMode::strict).valid);
  const auto loose = lerchsum::validate_theorem_params(p, ValidationMode::permissive);
  CHECK(loose.valid);
  CHECK(mentions(loose.warnings, "divisible by n"));
}

TEST_CASE("convergence and branch conditions") {
  TheoremParams p = kBase;
  p.m = {0.3, -0.1};
  CHECK_FALSE(lerchsum::validate_theorem_params(p, ValidationMode::strict).valid);
  const auto loose = lerchsum::validate_theorem_params(p, ValidationMode::permissive);
  CHECK(loose.valid);
  CHECK_FALSE(loose.warnings.empty());

  p = kBase;
  p.a = 0.0;
  CHECK_FALSE(lerchsum::validate_theorem_params(p, ValidationMode::permissive).valid);

  p = kBase;
  p.a = 1.0;
  p.k = -1.0;
  CHECK_FALSE(lerchsum::validate_theorem_params(p, ValidationMode::strict).valid);
  p.k = {0.5, 0.0};
  CHECK_FALSE(lerchsum::validate_theorem_params(p, ValidationMode::strict).valid);
  p.k = 2.0;
  CHECK(lerchsum::validate_theorem_params(p, ValidationMode::strict).valid);

  p = kBase;
  p.q = 0;
  CHECK_FALSE(lerchsum::validate_theorem_params(p, ValidationMode::permissive).valid);
}

TEST_CASE("n = 2 is flagged as known suspect") {
  TheoremParams p = kBase;
  p.n = 2;
  p.q = 1;
  const auto strict = lerchsum::validate_theorem_params(p, ValidationMode::strict);
  CHECK_FALSE(strict.valid);
  CHECK(strict.known_suspect);
  const auto loose = lerchsum::validate_theorem_params(p, ValidationMode::permissive);
  CHECK(loose.valid);
  CHECK(loose.known_suspect);

  const auto pair = lerchsum::validate_index_pair(2, 1, ValidationMode::strict);
  CHECK(pair.known_suspect);
  CHECK(pair.violations.size() == 1);
}

TEST_CASE("validation is pure") {
  TheoremParams p = kBase;
  p.n = 9;
  p.q = 9;
  p.m = {0.0, -1.0};
  const auto a = lerchsum::validate_theorem_params(p, ValidationMode::strict);
  const auto b = lerchsum::validate_theorem_params(p, ValidationMode::strict);
  CHECK(a.valid == b.valid);
  CHECK(a.violations == b.violations);
  CHECK(a.warnings == b.warnings);
  CHECK(a.violations.size() >= 3);
}
