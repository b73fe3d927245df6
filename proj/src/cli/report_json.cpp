#include "cli/report_json.hpp"

#include "lerchsum/complex_literal.hpp"

namespace lerchsum::cli {

SweepSummary summarize(const std::vector<IdentityReport>& reports) {
  SweepSummary s;
  for (const auto& r : reports) {
    ++s.total;
    switch (r.status) {
      case ReportStatus::evaluated: ++(r.pass ? s.passed : s.failed); break;
      case ReportStatus::error: ++s.errored; break;
      case ReportStatus::invalid: ++s.invalid; break;
      case ReportStatus::known_suspect: ++s.suspect; break;
    }
  }
  return s;
}

nlohmann::ordered_json to_json(const IdentityReport& report) {
  nlohmann::ordered_json params = nlohmann::ordered_json::object();
  for (const auto& [name, value] : report.params) params[name] = value;
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["record"] = "identity";
  j["identity_id"] = to_string(report.identity_id);
  j["params"] = std::move(params);
  const bool computed = report.status != ReportStatus::invalid;
  j["lhs"] = computed ? nlohmann::ordered_json(format_complex_literal(report.lhs)) : nullptr;
  j["rhs"] = computed ? nlohmann::ordered_json(format_complex_literal(report.rhs)) : nullptr;
  j["abs_residual"] = report.abs_residual;
  j["rel_residual"] = report.rel_residual;
  j["tol"] = report.tol;
  j["pass"] = report.pass;
  j["status"] = to_string(report.status);
  j["notes"] = report.notes;
  return j;
}

nlohmann::ordered_json to_json(const SweepSummary& s) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["record"] = "summary";
  j["total"] = s.total;
  j["passed"] = s.passed;
  j["failed"] = s.failed;
  j["errored"] = s.errored;
  j["invalid"] = s.invalid;
  j["suspect"] = s.suspect;
  return j;
}

nlohmann::ordered_json eval_record(const LerchParams& p, double tol, const EvalResult& result) {
  nlohmann::ordered_json j;
  j["schema"] = kReportSchema;
  j["record"] = "eval";
  j["z"] = format_complex_literal(p.z);
  j["s"] = format_complex_literal(p.s);
  j["v"] = format_complex_literal(p.v);
  j["tol"] = tol;
  j["value"] = format_complex_literal(result.value);
  j["abs_error_estimate"] = result.abs_error_estimate;
  j["method"] = to_string(result.method);
  j["work"] = result.work;
  return j;
}

std::string to_line(const nlohmann::ordered_json& record) {
  // Residuals can be NaN or infinite; those serialize as null.
  return record.dump(-1, ' ', false, nlohmann::ordered_json::error_handler_t::replace);
}

}  // namespace lerchsum::cli
