#include "acceptance/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>

#include "acceptance/oracle_fixtures.hpp"
#include "lerchsum/error.hpp"
#include "lerchsum/identities.hpp"
#include "lerchsum/lerch.hpp"

namespace lerchsum::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

constexpr Complex kI{0.0, 1.0};

std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", x);
  return buf;
}

// Bit-exact across standard libraries, unlike std::uniform_real_distribution.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : engine_(seed) {}
  double operator()(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }

 private:
  std::mt19937_64 engine_;
};

double fixture_error(Complex got, Complex want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

// Measure used by IdentityReport::pass.
double scored_residual(const IdentityReport& r) {
  return std::max(std::abs(r.lhs), std::abs(r.rhs)) < 1.0 ? r.abs_residual : r.rel_residual;
}

struct Criterion {
  int id;
  const char* title;
  double budget_seconds;  // 0: covered by the overall budget only
  std::function<CriterionResult()> run;
};

CriterionResult closed_form() {
  CriterionResult r;
  const auto ln2 = lerch_phi({0.5, 1.0, 1.0}, 1e-13);
  const auto zeta2 = lerch_phi({1.0, 2.0, 1.0}, 1e-10);
  const auto li2 = polylog(2.0, 0.5, 1e-12);
  const double e1 = std::abs(ln2.value - 2.0 * std::log(2.0));
  const double e2 = std::abs(zeta2.value - kPi * kPi / 6.0);
  const double e3 = std::abs(li2.value - (kPi * kPi / 12.0 - 0.5 * std::log(2.0) * std::log(2.0)));
  r.pass = e1 < 1e-12 && e2 < 1e-8 && e3 < 1e-10 && ln2.method == Method::series && zeta2.method == Method::integral;
  r.detail = "2ln2 err " + sci(e1) + " [" + std::string(to_string(ln2.method)) + "], zeta(2) err " + sci(e2) + " [" +
             std::string(to_string(zeta2.method)) + "], Li2(1/2) err " + sci(e3);
  return r;
}

CriterionResult theorem_grid() {
  const Complex ks[] = {0.0, 1.0, 2.0, -1.0, {0.5, 0.25}};
  const Complex as[] = {2.0, kI, std::exp(Complex{1.0, 1.0})};
  const Complex ms[] = {{0.3, 0.5}, {-0.2, 1.1}};
  int evaluated = 0;
  int skipped = 0;
  int bad = 0;
  double worst = 0.0;
  for (std::int64_t n : {3, 5, 7}) {
    for (std::int64_t q : {1, 2, 4}) {
      if (q % n == 0) continue;
      for (Complex k : ks) {
        for (Complex a : as) {
          for (Complex m : ms) {
            const auto report = check_theorem({k, a, m, n, q}, 1e-8);
            if (report.status == ReportStatus::invalid) {
              ++skipped;
              continue;
            }
            ++evaluated;
            if (report.status != ReportStatus::evaluated || !(report.rel_residual < 1e-8)) ++bad;
            if (report.status == ReportStatus::evaluated) worst = std::max(worst, report.rel_residual);
          }
        }
      }
    }
  }
  CriterionResult r;
  r.pass = bad == 0 && evaluated >= 200;
  r.detail = std::to_string(evaluated) + " strict-valid points, " + std::to_string(skipped) + " excluded, " +
             std::to_string(bad) + " above 1e-8, max rel residual " + sci(worst);
  return r;
}

CriterionResult tangent_sum() {
  int points = 0;
  int bad = 0;
  double worst = 0.0;
  for (std::int64_t n : {3, 5, 7, 11}) {
    for (std::int64_t q : {1, 2}) {
      // Real m on a fixed lattice, skipping anything near a tangent pole.
      int taken = 0;
      for (int i = 0; taken < 25; ++i) {
        const double m = -1.5 + 0.1234 * i;
        double nearest = std::fabs(std::cos(m * static_cast<double>(n)));
        for (std::int64_t p = 0; p < n; ++p)
          nearest = std::min(nearest, std::fabs(std::cos(m + kPi * static_cast<double>(p * q) / n)));
        if (nearest < 1e-2) continue;
        ++taken;
        ++points;
        const auto report = check_tan_sum(m, n, q, 1e-10);
        if (!report.pass) ++bad;
        worst = std::max(worst, scored_residual(report));
      }
    }
  }
  const auto anomaly = check_tan_sum(0.7, 2, 1, 1e-10);
  const bool oracle_ok = std::abs(anomaly.lhs - fixtures::kTanAnomalyLhs) < 1e-12 &&
                         std::abs(anomaly.rhs - fixtures::kTanAnomalyRhs) < 1e-12;
  // Rounded reference values -0.34116 and 11.5952, to 2%.
  const bool quoted_ok = std::abs(anomaly.lhs.real() + 0.34116) < 0.02 * 0.34116 &&
                         std::abs(anomaly.rhs.real() - 11.5952) < 0.02 * 11.5952;
  const bool anomaly_ok = anomaly.status == ReportStatus::known_suspect && !anomaly.pass && oracle_ok && quoted_ok;

  CriterionResult r;
  r.pass = bad == 0 && points == 200 && anomaly_ok;
  char buf[160];
  std::snprintf(buf, sizeof buf, "; n=2, m=0.7: lhs %.10f rhs %.10f (%s)", anomaly.lhs.real(), anomaly.rhs.real(),
                std::string(to_string(anomaly.status)).c_str());
  r.detail = std::to_string(points) + " points, " + std::to_string(bad) + " above 1e-10, max residual " + sci(worst) +
             buf;
  return r;
}

CriterionResult catalan() {
  const double k = catalan_constant(1e-12);
  const double k_err = std::abs(k - 0.9159655941772190);
  int cases = 0;
  int bad = 0;
  double worst = 0.0;
  for (std::int64_t n : {3, 5, 7}) {
    for (std::int64_t q = 1; q < n; ++q) {
      ++cases;
      const auto report = check_catalan_sum(n, q, 1e-8);
      const double err = std::abs(report.lhs - 4.0 * k);
      if (report.status != ReportStatus::evaluated || !(err < 1e-8)) ++bad;
      worst = std::max(worst, err);
    }
  }
  CriterionResult r;
  r.pass = bad == 0 && k_err < 1e-12;
  r.detail = std::to_string(cases) + " (n, q) cases, max |LHS - 4K| " + sci(worst) + ", K err " + sci(k_err);
  return r;
}

CriterionResult recurrence() {
  const Complex ss[] = {2.0, -1.0, {1.5, 1.0}};
  Uniform u(20240601);
  int bad = 0;
  double worst = 0.0;
  for (int i = 0; i < 50; ++i) {
    const Complex z = std::polar(u(0.0, 0.8), u(-kPi, kPi));
    const Complex a{u(0.2, 3.0), u(-1.0, 1.0)};
    const auto report = check_recurrence({z, ss[i % 3], a, 1 + i % 2}, 1e-9);
    if (!report.pass) ++bad;
    worst = std::max(worst, scored_residual(report));
  }
  CriterionResult r;
  r.pass = bad == 0;
  r.detail = "50 points, " + std::to_string(bad) + " above 1e-9, max residual " + sci(worst);
  return r;
}

CriterionResult products() {
  int value_mismatch = 0;
  int map_mismatch = 0;
  int holds = 0;
  double worst = 0.0;
  for (const auto& f : fixtures::kProductFixtures) {
    const auto report = check_product_identity(f.id, {f.x, f.m, f.r}, f.n, f.q, 1e-10);
    const double err = std::max(fixture_error(report.lhs, f.lhs), fixture_error(report.rhs, f.rhs));
    worst = std::max(worst, err);
    if (report.status != ReportStatus::evaluated || !(err < 1e-10)) ++value_mismatch;
    if (report.pass != f.pass) ++map_mismatch;
    if (report.pass) ++holds;
  }
  const int total = static_cast<int>(std::size(fixtures::kProductFixtures));
  CriterionResult r;
  r.pass = value_mismatch == 0 && map_mismatch == 0;
  r.detail = std::to_string(total) + " fixtures, max side error " + sci(worst) + ", region map " +
             std::to_string(holds) + " hold / " + std::to_string(total - holds) + " fail, " +
             std::to_string(map_mismatch) + " map mismatches";
  return r;
}

CriterionResult cross_representation() {
  Uniform u(7);
  int bad = 0;
  double worst = 0.0;
  for (int i = 0; i < 200; ++i) {
    const LerchParams p{std::polar(u(0.1, 0.9), u(-kPi, kPi)), {u(0.5, 3.0), u(-2.0, 2.0)}, {u(0.5, 4.0), u(-1.0, 1.0)}};
    try {
      const double diff =
          std::abs(lerch_phi_series(p, 1e-12).value - lerch_phi_shifted_integral(p, 1e-12).value);
      worst = std::max(worst, diff);
      if (!(diff < 1e-9)) ++bad;
    } catch (const Error&) {
      ++bad;
    }
  }
  int dishonest = 0;
  double worst_ratio = 0.0;
  for (const auto& f : fixtures::kLerchFixtures) {
    try {
      const auto result = lerch_phi({f.z, f.s, f.v}, 1e-12);
      const double err = std::abs(result.value - f.value);
      const double ratio = err / std::max(result.abs_error_estimate, 1e-300);
      worst_ratio = std::max(worst_ratio, ratio);
      if (!(err <= 10.0 * result.abs_error_estimate)) ++dishonest;
    } catch (const Error&) {
      ++dishonest;
    }
  }
  CriterionResult r;
  r.pass = bad == 0 && dishonest == 0;
  r.detail = "200 overlap points, max |series - integral| " + sci(worst) + "; " +
             std::to_string(std::size(fixtures::kLerchFixtures)) + " fixtures, max error/estimate " + sci(worst_ratio);
  return r;
}

CriterionResult roots_of_unity() {
  int cases = 0;
  int bad = 0;
  for (std::int64_t n : {3, 5, 7}) {
    for (std::int64_t q = 1; q < n; ++q) {
      for (std::int64_t j = 0; j < 100; ++j) {
        ++cases;
        const Complex expected = (q * (j + 1)) % n == 0 ? Complex(static_cast<double>(n), 0.0) : Complex{};
        if (!(std::abs(roots_of_unity_sum(n, q, j) - expected) < 1e-12)) ++bad;
      }
    }
  }
  CriterionResult r;
  r.pass = bad == 0;
  r.detail = std::to_string(cases) + " sums, " + std::to_string(bad) + " off by 1e-12 or more";
  return r;
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all = {
      {1, "closed-form Phi values", 1.0, closed_form},
      {2, "prime-indexed Lerch sum grid", 60.0, theorem_grid},
      {3, "tangent sum", 0.0, tangent_sum},
      {4, "Catalan sum", 30.0, catalan},
      {5, "cubic recurrence", 0.0, recurrence},
      {6, "trigonometric products vs fixtures", 0.0, products},
      {7, "series / integral agreement", 0.0, cross_representation},
      {8, "roots-of-unity filter", 0.0, roots_of_unity},
  };
  return all;
}

std::vector<CriterionResult> run_core() {
  std::vector<CriterionResult> results;
  for (const auto& c : criteria()) {
    const auto start = Clock::now();
    CriterionResult r;
    try {
      r = c.run();
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("unexpected exception: ") + e.what();
    }
    const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
    r.id = c.id;
    r.title = c.title;
    if (c.budget_seconds > 0.0 && !(elapsed < c.budget_seconds)) {
      r.pass = false;
      r.detail += "; over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget";
    }
    results.push_back(std::move(r));
  }
  return results;
}

std::string render(const std::vector<CriterionResult>& results) {
  std::string out;
  for (const auto& r : results) out += format_line(r) + "\n";
  return out;
}

}  // namespace

std::string format_line(const CriterionResult& r) {
  return std::string(r.pass ? "PASS" : "FAIL") + "  " + std::to_string(r.id) + "  " + r.title + ": " + r.detail;
}

std::vector<CriterionResult> run_acceptance() {
  constexpr double kSuiteBudget = 300.0;
  const auto start = Clock::now();
  auto results = run_core();
  const double elapsed = std::chrono::duration<double>(Clock::now() - start).count();
  const bool identical = render(run_core()) == render(results);

  CriterionResult r;
  r.id = 9;
  r.title = "runtime and determinism";
  r.pass = identical && elapsed < kSuiteBudget;
  r.detail = std::string(identical ? "rerun byte-identical" : "rerun differs") + ", " +
             (elapsed < kSuiteBudget ? "within" : "over") + " the 300 s single-threaded budget";
  results.push_back(std::move(r));
  return results;
}

}  // namespace lerchsum::acceptance
