#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace orbimap {

enum class ErrorCode {
  MalformedInput,
  DimensionMismatch,
  NonOrthogonalGenerator,
  ClosureCapExceeded,
  EnumerationCapExceeded,
  CapExceeded,
  NotASubgroup,
  NotNormal,
  NotARepresentation,
  NotAHomomorphism,
  NotEquivariant,
  UnknownLabel,
  ChartMismatch,
  BundleMismatch,
  ThetaMismatch,
  NoLifts,
};

std::string_view to_string(ErrorCode code);

// Validation errors are the ones the CLI reports with exit code 2;
// MalformedInput is a parse failure (exit code 1).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  bool is_validation() const noexcept { return code_ != ErrorCode::MalformedInput; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, std::string(to_string(code)) + ": " + message);
}

}  // namespace orbimap
