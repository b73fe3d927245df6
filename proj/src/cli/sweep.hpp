#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cli/sweep_config.hpp"
#include "lerchsum/identities.hpp"

namespace lerchsum::cli {

using ParamPoint = std::vector<std::pair<std::string, std::string>>;

/// Parameter names an identity takes, in grid order.
const std::vector<std::string>& parameter_names(IdentityId id);

/// n and q are integers; every other parameter is a complex literal.
bool is_integer_parameter(std::string_view name);

/// 1e-10 for the elementary identities, 1e-8 for the Phi-based ones.
double default_tolerance(IdentityId id);

inline constexpr double kMinTolerance = 1e-14;
inline constexpr double kMaxTolerance = 1e-2;

/// Throws a validation Error for missing, unknown or unparseable parameters.
IdentityReport run_point(IdentityId id, const ParamPoint& point, double tol, ValidationMode mode);

/// Cartesian product in grid order.
std::vector<ParamPoint> expand_grid(const SweepConfig& config);

/// Reports in grid order whether or not points ran concurrently.
std::vector<IdentityReport> run_sweep(const SweepConfig& config);

}  // namespace lerchsum::cli
