#include "lerchsum/identities.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>

#include "lerchsum/complex_literal.hpp"
#include "lerchsum/error.hpp"
#include "lerchsum/lerch.hpp"

namespace lerchsum {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kCosPoleTol = 1e-6;

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const auto& item : items) {
    if (!out.empty()) out += "; ";
    out += item;
  }
  return out;
}

std::string integer_literal(std::int64_t v) { return std::to_string(v); }

// log^k(a) with log^0 = 1 even when Log(a) = 0.
Complex log_power(Complex log_a, Complex k) {
  if (k == Complex{}) return {1.0, 0.0};
  if (log_a == Complex{}) {
    if (k.imag() == 0.0 && k.real() > 0.0 && std::round(k.real()) == k.real()) return {};
    throw Error(ErrorKind::domain, "log^k(a) is singular at Log(a) = 0");
  }
  return complex_pow(log_a, k);
}

// pi * (p q mod n) / n; e^{2i theta} only depends on p q modulo n.
double reduced_angle(std::int64_t p, std::int64_t q, std::int64_t n) {
  return kPi * static_cast<double>((p % n) * (q % n) % n) / static_cast<double>(n);
}

double phi_tolerance(double tol, std::int64_t n, Complex prefactor) {
  return tol / (4.0 * static_cast<double>(n) * std::max(1.0, std::abs(prefactor)));
}

void require_cos_off_zero(Complex arg, const std::string& where) {
  if (std::abs(std::cos(arg)) < kCosPoleTol)
    throw Error(ErrorKind::pole, "cosine within 1e-6 of zero at " + where);
}

// Begins a report; returns false when nothing should be evaluated.
bool open_report(IdentityReport& report, const ValidationReport& validation) {
  std::vector<std::string> notes = validation.violations;
  notes.insert(notes.end(), validation.warnings.begin(), validation.warnings.end());
  report.notes = join(notes);
  if (validation.valid) return true;
  if (validation.known_suspect && validation.violations.size() == 1) {
    report.status = ReportStatus::known_suspect;
    return true;
  }
  report.status = ReportStatus::invalid;
  report.pass = false;
  return false;
}

template <class Body>
void evaluate_into(IdentityReport& report, Body body) {
  try {
    body();
    score(report);
  } catch (const Error& e) {
    if (report.status != ReportStatus::known_suspect) report.status = ReportStatus::error;
    report.pass = false;
    report.notes += report.notes.empty() ? "" : "; ";
    report.notes += std::string(to_string(e.kind())) + " error: " + e.what();
  }
}

}  // namespace

std::string_view to_string(IdentityId id) noexcept {
  switch (id) {
    case IdentityId::theorem: return "theorem";
    case IdentityId::tan_sum: return "tan_sum";
    case IdentityId::product_ex2: return "product_ex2";
    case IdentityId::product_ex3: return "product_ex3";
    case IdentityId::product_ex4: return "product_ex4";
    case IdentityId::catalan: return "catalan";
    case IdentityId::recurrence: return "recurrence";
  }
  return "unknown";
}

IdentityId identity_from_string(std::string_view name) {
  constexpr std::array kAll = {IdentityId::theorem,     IdentityId::tan_sum,     IdentityId::product_ex2,
                               IdentityId::product_ex3, IdentityId::product_ex4, IdentityId::catalan,
                               IdentityId::recurrence};
  for (IdentityId id : kAll) {
    if (to_string(id) == name) return id;
  }
  throw Error(ErrorKind::validation, "unknown identity '" + std::string(name) + "'");
}

IdentityId to_identity(ProductCase c) noexcept {
  switch (c) {
    case ProductCase::ex2: return IdentityId::product_ex2;
    case ProductCase::ex3: return IdentityId::product_ex3;
    case ProductCase::ex4: return IdentityId::product_ex4;
  }
  return IdentityId::product_ex2;
}

std::string_view to_string(ReportStatus status) noexcept {
  switch (status) {
    case ReportStatus::evaluated: return "evaluated";
    case ReportStatus::invalid: return "invalid";
    case ReportStatus::known_suspect: return "known_suspect";
    case ReportStatus::error: return "error";
  }
  return "unknown";
}

void score(IdentityReport& report) {
  report.abs_residual = std::abs(report.lhs - report.rhs);
  const double scale = std::max(std::abs(report.lhs), std::abs(report.rhs));
  report.rel_residual = report.abs_residual / std::max(scale, 1e-300);
  const double measure = scale < 1.0 ? report.abs_residual : report.rel_residual;
  report.pass = std::isfinite(measure) && measure < report.tol;
}

// --- Theorem ---------------------------------------------------------------

Complex theorem_lhs(const TheoremParams& p, double tol) {
  if (p.n < 1) throw Error(ErrorKind::domain, "n must be positive");
  const Complex log_a = principal_log(p.a);
  const Complex log_term = log_power(log_a, p.k);
  const Complex v = 1.0 - 0.5 * kI * log_a;
  const Complex scale = complex_pow(kI, p.k) * complex_pow(2.0, p.k + 1.0);
  Complex sum{};
  for (std::int64_t j = 0; j < p.n; ++j) {
    try {
      const Complex rotation = std::exp(2.0 * kI * (p.m + reduced_angle(j, p.q, p.n)));
      const Complex prefactor = scale * rotation;
      const EvalResult phi = lerch_phi({-rotation, -p.k, v}, phi_tolerance(tol, p.n, prefactor));
      sum += log_term - prefactor * phi.value;
    } catch (const Error& e) {
      throw Error(e.kind(), "p=" + std::to_string(j) + ": " + e.what(), e.method());
    }
  }
  return sum;
}

Complex theorem_rhs(const TheoremParams& p, double tol) {
  if (p.n < 1) throw Error(ErrorKind::domain, "n must be positive");
  const double n = static_cast<double>(p.n);
  const Complex log_a = principal_log(p.a);
  const Complex log_term = log_power(log_a, p.k);
  const Complex rotation = std::exp(2.0 * kI * p.m * n);
  const Complex prefactor = complex_pow(2.0, p.k + 1.0) * complex_pow(kI * n, p.k) * rotation;
  const EvalResult phi =
      lerch_phi({-rotation, -p.k, 1.0 - kI * log_a / (2.0 * n)}, phi_tolerance(tol, 1, prefactor));
  return n * (log_term - prefactor * phi.value);
}

IdentityReport check_theorem(const TheoremParams& p, double tol, ValidationMode mode) {
  IdentityReport report;
  report.identity_id = IdentityId::theorem;
  report.tol = tol;
  report.params = {{"k", format_complex_literal(p.k)},
                   {"a", format_complex_literal(p.a)},
                   {"m", format_complex_literal(p.m)},
                   {"n", integer_literal(p.n)},
                   {"q", integer_literal(p.q)}};
  if (!open_report(report, validate_theorem_params(p, mode))) return report;
  evaluate_into(report, [&] {
    report.lhs = theorem_lhs(p, tol);
    report.rhs = theorem_rhs(p, tol);
  });
  return report;
}

// --- Tangent sum -----------------------------------------------------------

IdentityReport check_tan_sum(Complex m, std::int64_t n, std::int64_t q, double tol) {
  IdentityReport report;
  report.identity_id = IdentityId::tan_sum;
  report.tol = tol;
  report.params = {{"m", format_complex_literal(m)}, {"n", integer_literal(n)}, {"q", integer_literal(q)}};
  if (!open_report(report, validate_index_pair(n, q, ValidationMode::strict))) return report;
  evaluate_into(report, [&] {
    const double nd = static_cast<double>(n);
    Complex lhs{};
    for (std::int64_t p = 0; p < n; ++p) {
      const Complex arg = m + kPi * static_cast<double>(p * q) / nd;
      require_cos_off_zero(arg, "p=" + std::to_string(p));
      lhs += std::tan(arg);
    }
    require_cos_off_zero(m * nd, "the right-hand side");
    report.lhs = lhs;
    report.rhs = nd * std::tan(m * nd);
  });
  return report;
}

// --- Trigonometric products ------------------------------------------------

ProductSides product_sides(ProductCase which, const ProductArgs& args, std::int64_t n, std::int64_t q) {
  if (n < 1) throw Error(ErrorKind::domain, "n must be positive");
  const double nd = static_cast<double>(n);
  auto sec = [](Complex arg, const std::string& where) {
    require_cos_off_zero(arg, where);
    return 1.0 / std::cos(arg);
  };
  ProductSides sides{{1.0, 0.0}, {}};
  switch (which) {
    case ProductCase::ex2: {
      const Complex x = args.x;
      for (std::int64_t p = 0; p < n; ++p) {
        const double t = kPi * static_cast<double>(p * q) / nd;
        const std::string where = "p=" + std::to_string(p);
        const Complex c = std::cos(t + x / 2.0);
        const Complex s = sec(t + x / 4.0, where);
        sides.lhs *= c * c * c * s * s * sec(t + x, where);
      }
      const Complex c = std::cos(nd * x / 2.0);
      const Complex s = sec(nd * x / 4.0, "the right-hand side");
      sides.rhs = c * c * c * s * s * sec(nd * x, "the right-hand side");
      break;
    }
    case ProductCase::ex3: {
      const Complex x = args.x;
      const Complex exponent = 2.0 * kI * kPi;
      for (std::int64_t p = 0; p < n; ++p) {
        const double t = kPi * static_cast<double>(p * q) / nd;
        const std::string where = "p=" + std::to_string(p);
        require_cos_off_zero(t + x / 2.0, where);
        const Complex ratio = std::cos(t + x / 2.0) * sec(t + x, where);
        sides.lhs *= std::exp(4.0 * std::tan(t + x) - 4.0 * std::tan(t + x / 2.0)) * complex_pow(ratio, exponent);
      }
      require_cos_off_zero(nd * x / 2.0, "the right-hand side");
      const Complex secant = sec(nd * x, "the right-hand side");
      sides.rhs = complex_pow(std::cos(nd * x / 2.0) * secant, exponent) *
                  std::exp(4.0 * nd * std::tan(nd * x / 2.0) * secant);
      break;
    }
    case ProductCase::ex4: {
      for (std::int64_t p = 0; p < n; ++p) {
        const double t = kPi * static_cast<double>(p * q) / nd;
        sides.lhs *= std::cos(args.m + t) * sec(t + args.r, "p=" + std::to_string(p));
      }
      sides.rhs = std::exp(kI * (nd - 1.0) * (args.m - args.r)) * std::cos(args.m * nd) *
                  sec(nd * args.r, "the right-hand side");
      break;
    }
  }
  return sides;
}

IdentityReport check_product_identity(ProductCase which, const ProductArgs& args, std::int64_t n, std::int64_t q,
                                      double tol) {
  IdentityReport report;
  report.identity_id = to_identity(which);
  report.tol = tol;
  if (which == ProductCase::ex4) {
    report.params = {{"m", format_complex_literal(args.m)}, {"r", format_complex_literal(args.r)}};
  } else {
    report.params = {{"x", format_complex_literal(args.x)}};
  }
  report.params.emplace_back("n", integer_literal(n));
  report.params.emplace_back("q", integer_literal(q));
  if (!open_report(report, validate_index_pair(n, q, ValidationMode::strict))) return report;
  evaluate_into(report, [&] {
    const ProductSides sides = product_sides(which, args, n, q);
    report.lhs = sides.lhs;
    report.rhs = sides.rhs;
  });
  if (which != ProductCase::ex2 && report.status == ReportStatus::evaluated) {
    report.notes += report.notes.empty() ? "" : "; ";
    report.notes += "principal-branch evaluation; identity is branch-sensitive";
  }
  return report;
}

// --- Catalan ---------------------------------------------------------------

double catalan_constant(double tol) {
  // Cohen, Rodriguez Villegas, Zagier: for a_k a moment sequence the error
  // after n terms is at most 2 |S| / (3 + sqrt 8)^n.
  tol = std::max(tol, 1e-14);
  const double rate = 3.0 + std::sqrt(8.0);
  const int n = static_cast<int>(std::ceil(std::log(2.0 / tol) / std::log(rate))) + 1;
  double d = std::pow(rate, n);
  d = 0.5 * (d + 1.0 / d);
  double b = -1.0;
  double c = -d;
  double s = 0.0;
  for (int k = 0; k < n; ++k) {
    c = b - c;
    const double odd = 2.0 * k + 1.0;
    s += c / (odd * odd);
    b = (static_cast<double>(k) + n) * (static_cast<double>(k) - n) * b / ((k + 0.5) * (k + 1.0));
  }
  return s / d;
}

Complex catalan_sum_lhs(std::int64_t n, std::int64_t q, double tol) {
  if (n < 1) throw Error(ErrorKind::domain, "n must be positive");
  const double nd = static_cast<double>(n);
  const Complex v{1.0 - nd / 2.0, 0.0};
  Complex sum{};
  for (std::int64_t p = 0; p < n; ++p) {
    try {
      const double theta = reduced_angle(p, q, n) + kPi / nd;
      const Complex rotation = std::exp(2.0 * kI * theta);
      const Complex prefactor = nd * rotation;
      const EvalResult phi = lerch_phi({-rotation, Complex{2.0, 0.0}, v}, phi_tolerance(tol, n, prefactor));
      sum += prefactor * phi.value;
    } catch (const Error& e) {
      throw Error(e.kind(), "p=" + std::to_string(p) + ": " + e.what(), e.method());
    }
  }
  return sum;
}

IdentityReport check_catalan_sum(std::int64_t n, std::int64_t q, double tol) {
  IdentityReport report;
  report.identity_id = IdentityId::catalan;
  report.tol = tol;
  report.params = {{"n", integer_literal(n)}, {"q", integer_literal(q)}};
  if (!open_report(report, validate_index_pair(n, q, ValidationMode::strict))) return report;
  evaluate_into(report, [&] {
    report.lhs = catalan_sum_lhs(n, q, tol);
    report.rhs = 4.0 * catalan_constant(std::clamp(tol / 10.0, 1e-14, 1e-12));
  });
  return report;
}

// --- Recurrence --------------------------------------------------------------

IdentityReport check_recurrence(const RecurrenceParams& p, double tol) {
  IdentityReport report;
  report.identity_id = IdentityId::recurrence;
  report.tol = tol;
  report.params = {{"z", format_complex_literal(p.z)},
                   {"s", format_complex_literal(p.s)},
                   {"a", format_complex_literal(p.a)},
                   {"q", integer_literal(p.q)}};
  ValidationReport validation;
  auto reject = [&](std::string message) {
    validation.valid = false;
    validation.violations.push_back(std::move(message));
  };
  if (!is_finite(p.z) || !is_finite(p.s) || !is_finite(p.a)) reject("non-finite parameter");
  if (!(std::abs(p.z) < 1.0 - kUnitCircleTolerance)) reject("|z| must be below 1");
  if (p.q < 1 || p.q % 3 == 0) reject("q must be a positive integer not divisible by 3");
  if (distance_to_nonpositive_integer(p.a) < kPoleTolerance) reject("a is a pole of Phi");
  if (distance_to_nonpositive_integer((p.a + 2.0) / 3.0) < kPoleTolerance) reject("(a+2)/3 is a pole of Phi");
  if (!open_report(report, validation)) return report;

  evaluate_into(report, [&] {
    const double phi_tol = tol / 16.0;
    const double turn = 2.0 * kPi * static_cast<double>(p.q % 3) / 3.0;
    const Complex w = std::polar(1.0, turn);
    const Complex w2 = std::polar(1.0, 2.0 * turn);
    auto phi = [&](Complex z, Complex v) { return lerch_phi_series({z, p.s, v}, phi_tol).value; };
    report.lhs = phi(p.z, p.a);
    report.rhs = -w * phi(w * p.z, p.a) - w2 * phi(w2 * p.z, p.a) +
                 complex_pow(3.0, 1.0 - p.s) * p.z * p.z * phi(p.z * p.z * p.z, (p.a + 2.0) / 3.0);
  });
  return report;
}

Complex roots_of_unity_sum(std::int64_t n, std::int64_t q, std::int64_t j) {
  if (n < 1) throw Error(ErrorKind::domain, "n must be positive");
  Complex sum{};
  const std::int64_t step = (q % n) * ((j + 1) % n) % n;
  for (std::int64_t p = 0; p < n; ++p) {
    const std::int64_t residue = (p * step) % n;
    sum += std::polar(1.0, 2.0 * kPi * static_cast<double>(residue) / static_cast<double>(n));
  }
  return sum;
}

}  // namespace lerchsum
