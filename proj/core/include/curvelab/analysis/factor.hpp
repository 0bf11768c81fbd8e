#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "curvelab/poly/multipoly.hpp"

namespace curvelab {

inline constexpr std::uint64_t kDefaultAnalysisSeed = 0x5eed;
inline constexpr int kDefaultIrreducibilityTrials = 5;

struct PolyFactor {
  MultiPoly factor;  // normalized: integer coefficients, content 1, positive leading coefficient
  int multiplicity = 1;
};

struct FactorizationResult {
  Rational unit;
  /// Sorted by total degree, then canonical text.
  std::vector<PolyFactor> factors;
  std::string method = "exact-bivariate";
  /// "exact", or "probabilistic" for a verdict drawn from specializations.
  std::string confidence = "exact";
  int trials = 0;

  MultiPoly product() const;
  /// Number of irreducible factors counted with multiplicity.
  int count() const;
};

/// Complete factorization over Q of a polynomial in x and y only.
/// The square-free part is specialized at a lucky y = y0, the image is
/// factored over Q, the factors are lifted in powers of (y - y0) and
/// recombined by exact trial division. Throws kInvalidArgument for other
/// variables and kUnluckySpecialization when no usable y0 is found.
FactorizationResult factor_bivariate(const MultiPoly& F);

enum class Irreducibility { kIrreducible, kReducible, kReducibleAtSpecialization };

const char* irreducibility_name(Irreducibility v);

struct IrreducibilityVerdict {
  Irreducibility verdict = Irreducibility::kIrreducible;
  /// True when F had no parameters and the factorization is exact.
  bool exact = true;
  int trials = 0;
  /// Content in the parameters that was set aside (1 when none).
  MultiPoly parameter_content;
  /// Parameter values used for the reducibility witness (empty when exact).
  Assignment witness_point;
  /// Factors of F (or of the witness specialization); verifiable by product.
  std::vector<PolyFactor> witness;

  std::string summary() const;
};

struct IrreducibilityOptions {
  int trials = kDefaultIrreducibilityTrials;
  std::uint64_t seed = kDefaultAnalysisSeed;
};

/// Irreducibility over Q of F in x and y, other variables being parameters.
/// Parameter content is removed first. Without parameters the verdict is
/// exact. Otherwise the parameters are specialized at `trials` random small
/// rationals keeping the degrees in x and y; throws kDegenerateSpecialization
/// when no such point is found.
IrreducibilityVerdict irreducible_over_rationals(const MultiPoly& F, const IrreducibilityOptions& options = {});

}  // namespace curvelab
