#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lerchsum {

/// One command-line invocation; `args` excludes the program name.
/// Exit codes: 0 everything passed, 1 an identity failed,
/// 2 usage, parse, domain or validation error.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lerchsum
