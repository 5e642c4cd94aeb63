#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace lf {

// Single exception type carrying a stable machine-readable code. The CLI
// maps any lf::Error to exit code 2 (input / precondition failure); anything
// else is an internal failure.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& message)
      : std::runtime_error(message), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

[[noreturn]] inline void fail(const std::string& code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace lf
