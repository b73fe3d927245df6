#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "lerchsum/identities.hpp"
#include "lerchsum/numtheory.hpp"

namespace lerchsum::cli {

// Sweep configuration, a TOML subset:
//
//   identity = "theorem"          # required
//   tol = 1e-8                    # optional, [1e-14, 1e-2]
//   output = "theorem.jsonl"      # optional, stdout when absent
//   parallel = true               # optional
//   mode = "strict"               # optional, theorem only
//
//   [grid]
//   n = [3, 5, 7]
//   m = ["0.3+0.5i", "-0.2+1.1i"] # complex literals as strings
//
// Scalars in [grid] are one-point grids. Arrays may span lines.

struct SweepConfig {
  IdentityId identity = IdentityId::theorem;
  // Canonical parameter order for the identity; the last key varies fastest.
  std::vector<std::pair<std::string, std::vector<std::string>>> grids;
  double tol = 0.0;
  std::string output_path;
  bool parallel = true;
  ValidationMode mode = ValidationMode::strict;
};

/// Throws a validation Error naming the offending line.
SweepConfig parse_sweep_config(std::string_view text);
SweepConfig load_sweep_config(const std::string& path);

}  // namespace lerchsum::cli
