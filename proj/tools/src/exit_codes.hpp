#pragma once

#include <stdexcept>
#include <string>

namespace spinpair::cli {

enum class ExitCode : int {
  Ok = 0,
  VerificationFailure = 1,
  InputValidation = 2,
  InvalidState = 3,
  EmptyResult = 4,
  Io = 5,
};

/// Raised by command code to terminate with a specific exit code.
class CliError : public std::runtime_error {
 public:
  CliError(ExitCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  [[nodiscard]] ExitCode code() const noexcept { return code_; }

 private:
  ExitCode code_;
};

}  // namespace spinpair::cli
