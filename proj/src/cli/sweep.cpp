#include "cli/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <exception>
#include <map>
#include <thread>

#include "lerchsum/complex_literal.hpp"
#include "lerchsum/error.hpp"

namespace lerchsum::cli {

namespace {

class PointReader {
 public:
  explicit PointReader(const ParamPoint& point) {
    for (const auto& [name, value] : point) {
      if (!values_.emplace(name, value).second)
        throw Error(ErrorKind::validation, "parameter '" + name + "' given twice");
    }
  }

  Complex complex(const std::string& name) const {
    const auto parsed = parse_complex_literal(raw(name));
    if (!parsed) throw Error(ErrorKind::validation, "'" + raw(name) + "' is not a complex literal (" + name + ")");
    return *parsed;
  }

  std::int64_t integer(const std::string& name) const {
    const std::string& text = raw(name);
    std::int64_t value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size())
      throw Error(ErrorKind::validation, "'" + text + "' is not an integer (" + name + ")");
    return value;
  }

 private:
  const std::string& raw(const std::string& name) const {
    const auto it = values_.find(name);
    if (it == values_.end()) throw Error(ErrorKind::validation, "missing parameter '" + name + "'");
    return it->second;
  }

  std::map<std::string, std::string> values_;
};

}  // namespace

const std::vector<std::string>& parameter_names(IdentityId id) {
  static const std::vector<std::string> theorem{"n", "q", "k", "a", "m"};
  static const std::vector<std::string> tan_sum{"n", "q", "m"};
  static const std::vector<std::string> product_x{"n", "q", "x"};
  static const std::vector<std::string> product_mr{"n", "q", "m", "r"};
  static const std::vector<std::string> catalan{"n", "q"};
  static const std::vector<std::string> recurrence{"z", "s", "a", "q"};
  switch (id) {
    case IdentityId::theorem: return theorem;
    case IdentityId::tan_sum: return tan_sum;
    case IdentityId::product_ex2:
    case IdentityId::product_ex3: return product_x;
    case IdentityId::product_ex4: return product_mr;
    case IdentityId::catalan: return catalan;
    case IdentityId::recurrence: return recurrence;
  }
  return theorem;
}

bool is_integer_parameter(std::string_view name) { return name == "n" || name == "q"; }

double default_tolerance(IdentityId id) {
  switch (id) {
    case IdentityId::tan_sum:
    case IdentityId::product_ex2:
    case IdentityId::product_ex3:
    case IdentityId::product_ex4: return 1e-10;
    case IdentityId::theorem:
    case IdentityId::catalan:
    case IdentityId::recurrence: return 1e-8;
  }
  return 1e-8;
}

IdentityReport run_point(IdentityId id, const ParamPoint& point, double tol, ValidationMode mode) {
  const auto& names = parameter_names(id);
  for (const auto& [name, value] : point) {
    if (std::find(names.begin(), names.end(), name) == names.end())
      throw Error(ErrorKind::validation, "'" + name + "' is not a parameter of " + std::string(to_string(id)));
  }
  const PointReader in(point);
  switch (id) {
    case IdentityId::theorem:
      return check_theorem({in.complex("k"), in.complex("a"), in.complex("m"), in.integer("n"), in.integer("q")},
                           tol, mode);
    case IdentityId::tan_sum: return check_tan_sum(in.complex("m"), in.integer("n"), in.integer("q"), tol);
    case IdentityId::product_ex2:
      return check_product_identity(ProductCase::ex2, {in.complex("x"), {}, {}}, in.integer("n"), in.integer("q"),
                                    tol);
    case IdentityId::product_ex3:
      return check_product_identity(ProductCase::ex3, {in.complex("x"), {}, {}}, in.integer("n"), in.integer("q"),
                                    tol);
    case IdentityId::product_ex4:
      return check_product_identity(ProductCase::ex4, {{}, in.complex("m"), in.complex("r")}, in.integer("n"),
                                    in.integer("q"), tol);
    case IdentityId::catalan: return check_catalan_sum(in.integer("n"), in.integer("q"), tol);
    case IdentityId::recurrence:
      return check_recurrence({in.complex("z"), in.complex("s"), in.complex("a"), in.integer("q")}, tol);
  }
  throw Error(ErrorKind::validation, "unknown identity");
}

std::vector<ParamPoint> expand_grid(const SweepConfig& config) {
  std::vector<ParamPoint> points{ParamPoint{}};
  for (const auto& [name, values] : config.grids) {
    std::vector<ParamPoint> next;
    next.reserve(points.size() * values.size());
    for (const auto& prefix : points) {
      for (const auto& value : values) {
        ParamPoint p = prefix;
        p.emplace_back(name, value);
        next.push_back(std::move(p));
      }
    }
    points = std::move(next);
  }
  return points;
}

std::vector<IdentityReport> run_sweep(const SweepConfig& config) {
  const auto points = expand_grid(config);
  std::vector<IdentityReport> reports(points.size());
  auto run = [&](std::size_t i) { reports[i] = run_point(config.identity, points[i], config.tol, config.mode); };

  const std::size_t workers =
      config.parallel ? std::min<std::size_t>(std::max(1U, std::thread::hardware_concurrency()), points.size()) : 1;
  if (workers <= 1) {
    for (std::size_t i = 0; i < points.size(); ++i) run(i);
    return reports;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::exception_ptr> failures(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = next++; i < points.size(); i = next++) run(i);
      } catch (...) {
        failures[w] = std::current_exception();
        next = points.size();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (const auto& f : failures) {
    if (f) std::rethrow_exception(f);
  }
  return reports;
}

}  // namespace lerchsum::cli
