#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace curvelab {

// Every failure raised by the library carries one of these codes. The CLI
// maps them to exit codes and the HTTP service to status codes.
enum class ErrorCode {
  kSyntax,
  kUnknownIdentifier,
  kNonPolynomial,
  kSemantic,
  kMissingVariable,
  kUnsupportedFunction,
  kMultipleSqrt,
  kUnknownCurve,
  kUnboundParameter,
  kDegenerateConstruction,
  kCurveOnAxis,
  kEmptyRange,
  kDeadlineExceeded,
  kEliminationFailed,
  kTrivialResult,
  kUnluckySpecialization,
  kDegenerateSpecialization,
  kNoFactorMatches,
  kPositiveDimensional,
  kInvalidArgument,
  kTooManyVariables,
  kValidation,
};

std::string_view error_code_name(ErrorCode code);

struct SourceLocation {
  std::size_t offset = 0;
  std::size_t line = 0;    // 1-based, 0 when unknown
  std::size_t column = 0;  // 1-based, 0 when unknown
};

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message,
        std::optional<SourceLocation> location = std::nullopt)
      : std::runtime_error(message), code_(code), location_(location) {}

  ErrorCode code() const noexcept { return code_; }
  const std::optional<SourceLocation>& location() const noexcept {
    return location_;
  }

 private:
  ErrorCode code_;
  std::optional<SourceLocation> location_;
};

}  // namespace curvelab
