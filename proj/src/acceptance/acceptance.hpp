#pragma once

#include <string>
#include <vector>

namespace lerchsum::acceptance {

struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  std::string detail;  // deterministic: counts and residuals, never timings
};

/// Runs every criterion single-threaded, in order. The last criterion
/// reruns the others and requires byte-identical output.
std::vector<CriterionResult> run_acceptance();

/// "PASS  3  tangent sum: ..." style line.
std::string format_line(const CriterionResult& result);

}  // namespace lerchsum::acceptance
