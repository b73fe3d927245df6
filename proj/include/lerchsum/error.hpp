#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lerchsum {

enum class ErrorKind { domain, pole, non_convergence, validation };

std::string_view to_string(ErrorKind kind) noexcept;

// Single exception type for the library. `method` names the evaluation
// strategy that was running when the failure happened (empty otherwise).
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::string method = {});

  ErrorKind kind() const noexcept { return kind_; }
  const std::string& method() const noexcept { return method_; }

 private:
  ErrorKind kind_;
  std::string method_;
};

}  // namespace lerchsum
