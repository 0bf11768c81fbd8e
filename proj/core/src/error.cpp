#include "curvelab/error.hpp"

namespace curvelab {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kSyntax: return "syntax-error";
    case ErrorCode::kUnknownIdentifier: return "unknown-identifier";
    case ErrorCode::kNonPolynomial: return "non-polynomial";
    case ErrorCode::kSemantic: return "semantic-error";
    case ErrorCode::kMissingVariable: return "missing-variable";
    case ErrorCode::kUnsupportedFunction: return "unsupported-function";
    case ErrorCode::kMultipleSqrt: return "multiple-sqrt";
    case ErrorCode::kUnknownCurve: return "unknown-curve";
    case ErrorCode::kUnboundParameter: return "unbound-parameter";
    case ErrorCode::kDegenerateConstruction: return "degenerate-construction";
    case ErrorCode::kCurveOnAxis: return "curve-on-axis";
    case ErrorCode::kEmptyRange: return "empty-range";
    case ErrorCode::kDeadlineExceeded: return "deadline-exceeded";
    case ErrorCode::kEliminationFailed: return "elimination-failed";
    case ErrorCode::kTrivialResult: return "trivial-result";
    case ErrorCode::kUnluckySpecialization: return "unlucky-specialization-exhausted";
    case ErrorCode::kDegenerateSpecialization: return "degenerate-specialization";
    case ErrorCode::kNoFactorMatches: return "no-factor-matches";
    case ErrorCode::kPositiveDimensional: return "positive-dimensional-singular-locus";
    case ErrorCode::kInvalidArgument: return "invalid-argument";
    case ErrorCode::kTooManyVariables: return "too-many-variables";
    case ErrorCode::kValidation: return "validation-error";
  }
  return "unknown";
}

}  // namespace curvelab
