#include "lerchsum/lerch.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <string>
#include <vector>

#include "lerchsum/error.hpp"

namespace lerchsum {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

std::string format_double(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

void require_tolerance(double tol) {
  if (!(tol > 0.0) || !std::isfinite(tol)) throw Error(ErrorKind::domain, "tolerance must be positive");
}

void require_finite_params(const LerchParams& p) {
  require_finite(p.z, "z");
  require_finite(p.s, "s");
  require_finite(p.v, "v");
}

void require_off_poles(Complex v) {
  if (distance_to_nonpositive_integer(v) < kPoleTolerance)
    throw Error(ErrorKind::pole, "v is a non-positive integer (pole of Phi)");
}

bool is_unit_one(Complex z) { return std::abs(z - 1.0) <= kUnitCircleTolerance; }

bool on_unit_circle(Complex z) { return std::fabs(std::abs(z) - 1.0) <= kUnitCircleTolerance; }

// Rough magnitude of |(v+j)^{-s} z^j| for large j, used to decide whether
// the series tail bound can be met within a term budget.
bool series_reachable(const LerchParams& p, double tol, std::int64_t budget) {
  const double r = std::abs(p.z);
  if (r == 0.0) return true;
  const double n = static_cast<double>(budget);
  const Complex base = p.v + n;
  const double log_term = n * std::log(r) - p.s.real() * std::log(std::abs(base)) + p.s.imag() * std::arg(base);
  const double log_bound = log_term + std::log(r / (1.0 - r)) + std::log1p(std::abs(p.s) / n);
  return log_bound < std::log(tol);
}

// ---------------------------------------------------------------------------
// Double-exponential quadrature of
//   int_0^inf t^{s-1} e^{-vt} / (1 - z e^{-t}) dt
// split at t = 1. On (0,1] the map t = 1 / (1 + e^{-2y}), y = (pi/2) sinh u,
// is evaluated in log space so that t^{s-1} stays representable as t -> 0.
// On [1,inf) the map is t = 1 + e^{y}.
// For z = 1 the kernel absorbs one power of t: t / (1 - e^{-t}) is regular.

struct Integrand {
  Complex z;
  Complex s;
  Complex v;
  bool z_is_one;

  // e^{-vt} / (1 - z e^{-t}), times t when z = 1.
  Complex kernel(double t) const {
    const Complex decay = std::exp(-v * t);
    if (z_is_one) {
      if (t == 0.0) return decay;
      return decay * (t / -std::expm1(-t));
    }
    return decay / ((1.0 - z) - z * std::expm1(-t));
  }

  double power_shift() const { return z_is_one ? 1.0 : 0.0; }
};

struct LeftNode {
  double log_weight;  // log(dt/du)
  double log_t;
  double t;
};

LeftNode left_node(double u) {
  const double y = 0.5 * kPi * std::sinh(u);
  LeftNode node{};
  double log_one_minus_t = 0.0;
  if (y >= 0.0) {
    const double e = std::exp(-2.0 * y);
    node.log_t = -std::log1p(e);
    log_one_minus_t = -2.0 * y - std::log1p(e);
    node.t = 1.0 / (1.0 + e);
  } else {
    const double e = std::exp(2.0 * y);
    node.log_t = 2.0 * y - std::log1p(e);
    log_one_minus_t = -std::log1p(e);
    node.t = e / (1.0 + e);
  }
  node.log_weight = std::log(kPi * std::cosh(u)) + node.log_t + log_one_minus_t;
  return node;
}

struct RightNode {
  double log_weight;
  double t;
};

RightNode right_node(double u) {
  const double y = 0.5 * kPi * std::sinh(u);
  return {std::log(0.5 * kPi * std::cosh(u)) + y, 1.0 + std::exp(y)};
}

class DoubleExponential {
 public:
  explicit DoubleExponential(const Integrand& f) : f_(f) {
    left_range_ = find_range([this](double u) { return left_envelope(u); });
    right_range_ = find_range([this](double u) { return right_envelope(u); });
  }

  struct Result {
    Complex value;
    double error;
    std::int64_t nodes;
  };

  // Halves the step until two successive estimates differ by less than
  // `tol` (absolute, on the raw integral), the difference sinks to the
  // rounding floor (reported as the estimate), or the node cap is hit.
  Result integrate(double tol, std::int64_t node_cap) {
    double h = kInitialStep;
    Complex sum = sweep(h, 1);
    Complex estimate = h * sum;
    double best_error = std::numeric_limits<double>::infinity();
    for (int level = 1;; ++level) {
      h *= 0.5;
      sum += sweep(h, 2);
      const Complex refined = h * sum;
      const double diff = std::abs(refined - estimate);
      const double rounding = 4.0 * kEps * h * abs_sum_;
      best_error = std::min(best_error, std::max(diff, rounding));
      estimate = refined;
      if (level >= kMinLevels && (best_error < tol || diff <= rounding)) return {estimate, best_error, nodes_};
      if (nodes_ >= node_cap) {
        throw Error(ErrorKind::non_convergence,
                    "quadrature node cap reached (error estimate " + format_double(best_error) + ")");
      }
    }
  }

 private:
  static constexpr double kInitialStep = 0.5;
  static constexpr int kMinLevels = 3;
  static constexpr double kRangeLimit = 12.0;
  static constexpr double kRangeScan = 1.0 / 16.0;
  static constexpr double kEnvelopeCut = 1e-20;

  struct Range {
    double lo;
    double hi;
  };

  double left_envelope(double u) const {
    const LeftNode node = left_node(u);
    return node.log_weight + (f_.s.real() - 1.0 - f_.power_shift()) * node.log_t;
  }

  double right_envelope(double u) const {
    const RightNode node = right_node(u);
    if (!std::isfinite(node.t)) return -std::numeric_limits<double>::infinity();
    return node.log_weight + (f_.s.real() - 1.0) * std::log(node.t) - f_.v.real() * node.t;
  }

  // Log-envelopes are scanned on a fixed grid; the range keeps every node
  // whose envelope is within kEnvelopeCut of the peak.
  template <class Envelope>
  static Range find_range(Envelope envelope) {
    const int steps = static_cast<int>(kRangeLimit / kRangeScan);
    std::vector<double> values;
    values.reserve(2 * steps + 1);
    double peak = -std::numeric_limits<double>::infinity();
    for (int k = -steps; k <= steps; ++k) {
      const double e = envelope(k * kRangeScan);
      values.push_back(std::isnan(e) ? -std::numeric_limits<double>::infinity() : e);
      peak = std::max(peak, values.back());
    }
    const double cut = peak + std::log(kEnvelopeCut);
    int lo = 0;
    int hi = static_cast<int>(values.size()) - 1;
    while (lo < hi && values[lo] < cut) ++lo;
    while (hi > lo && values[hi] < cut) --hi;
    // One scan step of margin on each side.
    return {(lo - steps - 1) * kRangeScan, (hi - steps + 1) * kRangeScan};
  }

  Complex left_term(double u) const {
    const LeftNode node = left_node(u);
    const Complex exponent = node.log_weight + (f_.s - 1.0 - f_.power_shift()) * node.log_t;
    if (exponent.real() < -745.0) return {};
    return std::exp(exponent) * f_.kernel(node.t);
  }

  Complex right_term(double u) const {
    const RightNode node = right_node(u);
    if (!std::isfinite(node.t)) return {};
    const Complex exponent = node.log_weight + (f_.s - 1.0) * std::log(node.t) - f_.v * node.t;
    if (exponent.real() < -745.0) return {};
    return std::exp(exponent) / (1.0 - f_.z * std::exp(-node.t));
  }

  // Adds the nodes u = k h; stride 2 visits only odd k, the nodes that are
  // new after halving h.
  Complex sweep(double h, int stride) {
    Complex total{};
    auto visit = [&](const Range& range, auto term) {
      const long first = static_cast<long>(std::ceil(range.lo / h));
      const long last = static_cast<long>(std::floor(range.hi / h));
      for (long k = first; k <= last; ++k) {
        if (stride == 2 && (k % 2 == 0)) continue;
        const Complex value = term(k * h);
        total += value;
        abs_sum_ += std::abs(value);
        ++nodes_;
      }
    };
    visit(left_range_, [this](double u) { return left_term(u); });
    visit(right_range_, [this](double u) { return right_term(u); });
    return total;
  }

  Integrand f_;
  Range left_range_{};
  Range right_range_{};
  double abs_sum_ = 0.0;
  std::int64_t nodes_ = 0;
};

[[noreturn]] void rethrow_with_method(const Error& e, Method method) {
  throw Error(e.kind(), "[" + std::string(to_string(method)) + "] " + e.what(), std::string(to_string(method)));
}

}  // namespace

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::series: return "series";
    case Method::integral: return "integral";
    case Method::shifted_integral: return "shifted_integral";
  }
  return "unknown";
}

EvalResult lerch_phi_series(const LerchParams& p, double tol) {
  require_finite_params(p);
  require_tolerance(tol);
  require_off_poles(p.v);
  const double r = std::abs(p.z);
  if (r >= 1.0 - kUnitCircleTolerance) throw Error(ErrorKind::domain, "series requires |z| < 1");

  // Terms can grow before they decay: while v + j approaches the origin, and
  // while the polynomial factor j^{-Re s} outpaces |z|^j for Re(s) < 0.
  const double growth = std::max(0.0, -p.s.real()) * r / (1.0 - r);
  const std::int64_t min_terms =
      static_cast<std::int64_t>(std::max(0.0, std::ceil(-p.v.real())) + std::ceil(growth)) + 1;
  const double s_abs = std::abs(p.s);

  Complex sum{};
  Complex z_power{1.0, 0.0};
  double rounding = 0.0;
  for (std::int64_t j = 0; j < kSeriesTermCap; ++j) {
    const Complex base = p.v + static_cast<double>(j);
    const Complex term = complex_pow(base, -p.s) * z_power;
    sum += term;
    rounding += std::abs(term) * (4.0 + s_abs * (std::fabs(std::log(std::abs(base))) + kPi));
    if (j >= 1 && j >= min_terms) {
      const double bound = std::abs(term) * r / (1.0 - r) * (1.0 + s_abs / static_cast<double>(j));
      if (bound < tol) return {sum, bound + kEps * rounding, j + 1, Method::series};
    }
    z_power *= p.z;
  }
  throw Error(ErrorKind::non_convergence, "series term cap reached", std::string(to_string(Method::series)));
}

ShiftResult shift_v(const LerchParams& p, int steps) {
  require_finite_params(p);
  if (steps < 0) throw Error(ErrorKind::domain, "shift steps must be non-negative");
  Complex correction{};
  Complex z_power{1.0, 0.0};
  for (int j = 0; j < steps; ++j) {
    const Complex base = p.v + static_cast<double>(j);
    require_off_poles(base);
    correction += complex_pow(base, -p.s) * z_power;
    z_power *= p.z;
  }
  return {{p.z, p.s, p.v + static_cast<double>(steps)}, z_power, correction};
}

EvalResult lerch_phi_integral(const LerchParams& p, double tol) {
  require_finite_params(p);
  require_tolerance(tol);
  if (!(p.v.real() > 0.0)) throw Error(ErrorKind::domain, "integral representation requires Re(v) > 0");
  const bool z_is_one = is_unit_one(p.z);
  if (z_is_one) {
    if (!(p.s.real() > 1.0)) throw Error(ErrorKind::domain, "integral representation at z = 1 requires Re(s) > 1");
  } else {
    if (std::abs(p.z) > 1.0 + kUnitCircleTolerance)
      throw Error(ErrorKind::domain, "integral representation requires |z| <= 1");
    if (!(p.s.real() > 0.0)) throw Error(ErrorKind::domain, "integral representation requires Re(s) > 0");
  }

  const Complex inv_gamma = std::exp(-log_gamma(p.s));
  const double scale = std::abs(inv_gamma);
  const Integrand f{z_is_one ? Complex{1.0, 0.0} : p.z, p.s, p.v, z_is_one};
  DoubleExponential rule(f);
  const auto raw = rule.integrate(scale > 0.0 ? tol / scale : tol, kQuadratureNodeCap);
  const Complex value = raw.value * inv_gamma;
  if (!is_finite(value)) throw Error(ErrorKind::non_convergence, "integral overflowed", "integral");
  const double error = raw.error * scale + 8.0 * kEps * std::abs(value);
  return {value, error, raw.nodes, Method::integral};
}

EvalResult lerch_phi_shifted_integral(const LerchParams& p, double tol) {
  require_finite_params(p);
  require_off_poles(p.v);
  const int steps = p.v.real() < 1.0 ? static_cast<int>(std::ceil(1.0 - p.v.real())) : 0;
  const ShiftResult shift = shift_v(p, steps);
  const double m = std::abs(shift.multiplier);
  const EvalResult inner = lerch_phi_integral(shift.shifted, m > 1.0 ? tol / m : tol);
  const Complex value = shift.multiplier * inner.value + shift.correction;
  const double error = m * inner.abs_error_estimate + 4.0 * kEps * std::abs(shift.correction) * steps;
  return {value, error, inner.work + steps, Method::shifted_integral};
}

EvalResult lerch_phi(const LerchParams& p, double tol) {
  require_finite_params(p);
  require_tolerance(tol);
  require_off_poles(p.v);
  const double r = std::abs(p.z);

  Method method = Method::series;
  try {
    if (r < 1.0 - kUnitCircleTolerance) {
      if (r <= kDispatchRadius || series_reachable(p, tol, kSeriesDispatchBudget) || !(p.s.real() > 0.0))
        return lerch_phi_series(p, tol);
      method = Method::shifted_integral;
      return lerch_phi_shifted_integral(p, tol);
    }
    if (!on_unit_circle(p.z)) throw Error(ErrorKind::domain, "|z| > 1 is outside both representations");
    if (is_unit_one(p.z)) {
      if (!(p.s.real() > 1.0)) throw Error(ErrorKind::domain, "z = 1 requires Re(s) > 1");
      const LerchParams at_one{Complex{1.0, 0.0}, p.s, p.v};
      if (p.v.real() >= 1.0) {
        method = Method::integral;
        return lerch_phi_integral(at_one, tol);
      }
      method = Method::shifted_integral;
      return lerch_phi_shifted_integral(at_one, tol);
    }
    if (!(p.s.real() > 0.0)) throw Error(ErrorKind::domain, "|z| = 1 requires Re(s) > 0");
    method = Method::shifted_integral;
#ifdef LERCHSUM_MUTATE_DISPATCH
    // Deliberately broken build used to prove the self-test notices a bad
    // dispatcher: the shift correction is dropped.
    {
      const int steps = p.v.real() < 1.0 ? static_cast<int>(std::ceil(1.0 - p.v.real())) : 0;
      const ShiftResult shift = shift_v(p, steps);
      EvalResult broken = lerch_phi_integral(shift.shifted, tol);
      broken.value *= shift.multiplier;
      broken.method = Method::shifted_integral;
      return broken;
    }
#endif
    return lerch_phi_shifted_integral(p, tol);
  } catch (const Error& e) {
    if (!e.method().empty()) throw;
    rethrow_with_method(e, method);
  }
}

EvalResult hurwitz_zeta(Complex s, Complex v, double tol) {
  require_finite(s, "s");
  if (!(s.real() > 1.0)) throw Error(ErrorKind::domain, "Hurwitz zeta requires Re(s) > 1");
  return lerch_phi({Complex{1.0, 0.0}, s, v}, tol);
}

EvalResult polylog(Complex s, Complex z, double tol) {
  require_finite(s, "s");
  require_finite(z, "z");
  require_tolerance(tol);
  if (z == Complex{}) return {Complex{}, 0.0, 0, Method::series};
  const double r = std::abs(z);
  if (r >= 1.0 - kUnitCircleTolerance) {
    if (!on_unit_circle(z) || is_unit_one(z) || !(s.real() > 1.0))
      throw Error(ErrorKind::domain, "polylog requires |z| < 1, or |z| = 1 with z != 1 and Re(s) > 1");
  }
  EvalResult result = lerch_phi({z, s, Complex{1.0, 0.0}}, tol / r);
  result.value *= z;
  result.abs_error_estimate *= r;
  return result;
}

}  // namespace lerchsum
