#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "lerchsum/complex_core.hpp"

namespace lerchsum {

// Complex literal grammar, no spaces:
//   RE | IMi | RE(+|-)IMi
// with RE and IM decimal or scientific numbers, e.g. "2", "-1.1e-1i",
// "0.4+0.8i". A bare "i" is not accepted; write "1i".

/// Shortest round-trip form; parse_complex_literal(format_complex_literal(z)) == z.
std::string format_complex_literal(Complex z);

std::optional<Complex> parse_complex_literal(std::string_view text);

}  // namespace lerchsum
