#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "json.hpp"
#include "lerchsum/identities.hpp"
#include "lerchsum/lerch.hpp"

namespace lerchsum::cli {

// Every emitted line carries this under "schema".
inline constexpr const char* kReportSchema = "lerchsum.report/1";

struct SweepSummary {
  std::int64_t total = 0;
  std::int64_t passed = 0;
  std::int64_t failed = 0;   // evaluated, residual above tol
  std::int64_t errored = 0;  // evaluation raised
  std::int64_t invalid = 0;  // rejected by validation
  std::int64_t suspect = 0;  // n = 2, recorded only
};

SweepSummary summarize(const std::vector<IdentityReport>& reports);

nlohmann::ordered_json to_json(const IdentityReport& report);
nlohmann::ordered_json to_json(const SweepSummary& summary);
nlohmann::ordered_json eval_record(const LerchParams& p, double tol, const EvalResult& result);

/// Compact single-line serialization.
std::string to_line(const nlohmann::ordered_json& record);

}  // namespace lerchsum::cli
