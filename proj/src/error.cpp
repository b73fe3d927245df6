#include "lerchsum/error.hpp"

namespace lerchsum {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::pole: return "pole";
    case ErrorKind::non_convergence: return "non_convergence";
    case ErrorKind::validation: return "validation";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& message, std::string method)
    : std::runtime_error(message), kind_(kind), method_(std::move(method)) {}

}  // namespace lerchsum
