#include <cmath>
#include <random>

#include "acceptance/oracle_fixtures.hpp"
#include "doctest.h"
#include "lerchsum/complex_core.hpp"
#include "lerchsum/error.hpp"

using lerchsum::Complex;
using lerchsum::Error;
using lerchsum::ErrorKind;
using lerchsum::kPi;

namespace {

double rel_err(Complex got, Complex want) { return std::abs(got - want) / std::abs(want); }

ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("expected an Error");
  return ErrorKind::validation;
}

}  // namespace

TEST_CASE("principal_log branch convention") {
  CHECK(lerchsum::principal_log(1.0) == Complex{0.0, 0.0});
  CHECK(lerchsum::principal_log(-1.0) == Complex{0.0, kPi});
  // A negative zero imaginary part must not move the result to -i pi.
  CHECK(lerchsum::principal_log(Complex{-2.0, -0.0}).imag() == kPi);
  const Complex w{1.0, 0.5};
  CHECK(rel_err(lerchsum::principal_log(std::exp(w)), w) < 1e-15);
  CHECK(kind_of([] { lerchsum::principal_log(0.0); }) == ErrorKind::domain);
  CHECK(kind_of([] { lerchsum::principal_log(Complex{NAN, 0.0}); }) == ErrorKind::domain);
}

TEST_CASE("exp inverts principal_log off the negative axis") {
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> log_mod(std::log(1e-6), std::log(1e6));
  std::uniform_real_distribution<double> angle(-kPi, kPi);
  int checked = 0;
  while (checked < 10000) {
    const double a = angle(rng);
    if (kPi - std::fabs(a) < 1e-9) continue;
    const Complex z = std::polar(std::exp(log_mod(rng)), a);
    REQUIRE(rel_err(std::exp(lerchsum::principal_log(z)), z) < 1e-14);
    ++checked;
  }
}

TEST_CASE("complex_pow examples") {
  CHECK(std::abs(lerchsum::complex_pow(4.0, 0.5) - 2.0) < 1e-15);
  CHECK(std::abs(lerchsum::complex_pow(-1.0, 0.5) - Complex{0.0, 1.0}) < 1e-15);
  const Complex ii = lerchsum::complex_pow(Complex{0.0, 1.0}, Complex{0.0, 1.0});
  CHECK(std::abs(ii - std::exp(-kPi / 2.0)) < 1e-15);
  CHECK(std::abs(ii - 0.20787957635) < 1e-11);
  // Integer exponents never go through Log, so the cut does not leak phase.
  CHECK(lerchsum::complex_pow(-1.0, 2.0) == Complex{1.0, 0.0});
  CHECK(lerchsum::complex_pow(Complex{-1.0, -0.0}, 3.0) == Complex{-1.0, 0.0});
  CHECK(lerchsum::complex_pow(0.0, 2.0) == Complex{});
  CHECK(lerchsum::complex_pow(0.0, Complex{0.5, 3.0}) == Complex{});
  CHECK(kind_of([] { lerchsum::complex_pow(0.0, 0.0); }) == ErrorKind::domain);
  CHECK(kind_of([] { lerchsum::complex_pow(0.0, Complex{-1.0, 2.0}); }) == ErrorKind::domain);
}

TEST_CASE("integer fast path agrees with exp(w Log z)") {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> mod(0.2, 3.0);
  std::uniform_real_distribution<double> angle(-3.1, 3.1);
  constexpr double eps = 2.220446049250313e-16;
  for (int trial = 0; trial < 500; ++trial) {
    const Complex z = std::polar(mod(rng), angle(rng));
    REQUIRE(rel_err(lerchsum::complex_pow(z, 2.0), z * z) < 1e-13);
    for (int n = -64; n <= 64; n += 7) {
      const Complex fast = lerchsum::complex_pow(z, static_cast<double>(n));
      const Complex general = std::exp(static_cast<double>(n) * lerchsum::principal_log(z));
      const double scale = 4.0 + std::abs(static_cast<double>(n) * lerchsum::principal_log(z));
      REQUIRE(rel_err(general, fast) < 8.0 * eps * scale);
    }
  }
}

TEST_CASE("log_gamma examples") {
  CHECK(std::abs(lerchsum::log_gamma(1.0)) < 1e-15);
  CHECK(std::abs(lerchsum::log_gamma(0.5) - 0.5723649429247001) < 1e-14);
  const Complex s{3.5, 2.0};
  const Complex d = lerchsum::log_gamma(s + 1.0) - lerchsum::log_gamma(s) - lerchsum::principal_log(s);
  CHECK(std::fabs(d.real()) < 1e-13);
  const double turns = d.imag() / (2.0 * kPi);
  CHECK(std::fabs(turns - std::round(turns)) < 1e-13);
  CHECK(kind_of([] { lerchsum::log_gamma(0.0); }) == ErrorKind::pole);
  CHECK(kind_of([] { lerchsum::log_gamma(-3.0); }) == ErrorKind::pole);
  CHECK(kind_of([] { lerchsum::log_gamma(Complex{-3.0 + 1e-13, 0.0}); }) == ErrorKind::pole);
}

TEST_CASE("Gamma against extended-precision fixtures") {
  for (const auto& f : lerchsum::fixtures::kGammaFixtures) {
    CAPTURE(f.s);
    CHECK(rel_err(std::exp(lerchsum::log_gamma(f.s)), f.gamma) < 1e-13);
  }
}

TEST_CASE("Gamma recurrence on random arguments") {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> re(-10.0, 10.0);
  std::uniform_real_distribution<double> im(-10.0, 10.0);
  int checked = 0;
  while (checked < 1000) {
    const Complex s{re(rng), im(rng)};
    if (lerchsum::distance_to_nonpositive_integer(s) < 1e-3 ||
        lerchsum::distance_to_nonpositive_integer(s + 1.0) < 1e-3)
      continue;
    const Complex g1 = std::exp(lerchsum::log_gamma(s + 1.0));
    const Complex g0 = std::exp(lerchsum::log_gamma(s));
    REQUIRE(std::abs(g1 - s * g0) / std::abs(g1) < 1e-12);
    ++checked;
  }
}

TEST_CASE("Gamma reflection on random arguments") {
  std::mt19937_64 rng(9);
  std::uniform_real_distribution<double> re(-5.0, 5.0);
  std::uniform_real_distribution<double> im(-20.0, 20.0);
  for (int trial = 0; trial < 1000; ++trial) {
    const Complex s{re(rng), im(rng)};
    if (std::fabs(s.imag()) < 1e-3 && std::fabs(s.real() - std::round(s.real())) < 1e-3) continue;
    const Complex product = std::exp(lerchsum::log_gamma(s) + lerchsum::log_gamma(1.0 - s));
    const Complex expected = kPi / std::sin(kPi * s);
    REQUIRE(rel_err(product, expected) < 1e-11);
  }
}
