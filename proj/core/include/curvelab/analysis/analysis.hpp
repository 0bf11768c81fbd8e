#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "curvelab/analysis/factor.hpp"
#include "curvelab/elim/implicitize.hpp"
#include "curvelab/param/parametric.hpp"
#include "curvelab/poly/upoly.hpp"

namespace curvelab {

/// Keeps the factors of F that lie on the point's curve: those passing
/// verify_on_curve, or, for a fully bound point, vanishing at most of the
/// traced samples. Content in the parameters is always dropped. Dropped
/// factors are recorded in the provenance. Throws kNoFactorMatches when no
/// factor survives.
ImplicitCurve strip_extraneous(const MultiPoly& F, const ParametricPoint& point);

enum class SingularKind { kNode, kCusp, kUnresolved };
const char* singular_kind_name(SingularKind k);

struct SingularPoint {
  /// Exact when lo == hi; otherwise an isolating interval.
  RootInterval x;
  RootInterval y;
  SingularKind kind = SingularKind::kUnresolved;
  std::string note;
};

struct SingularReport {
  std::vector<SingularPoint> points;
  /// Points of the affine plane where F_x = F_y = 0 but F != 0 are not
  /// singular; the rational ones are listed here for reference.
  std::vector<std::array<Rational, 2>> off_curve_critical;
  std::vector<std::string> notes;
};

/// Singular points of F = 0 once every parameter is bound. Rational points
/// are exact and classified from the Hessian; irrational ones are returned
/// as intervals tagged unresolved. Throws kPositiveDimensional when F has a
/// repeated component and kUnboundParameter when symbols remain.
SingularReport singular_points(const MultiPoly& F, const Assignment& bindings = {});

struct SymmetryFlags {
  bool x_axis = false;  // F(x, -y) ~ F
  bool y_axis = false;  // F(-x, y) ~ F
  bool origin = false;  // F(-x, -y) ~ F
};

SymmetryFlags symmetry_flags(const MultiPoly& F);

struct VerticalAsymptotes {
  /// Leading coefficient of F in y.
  MultiPoly leading;
  /// Rational roots with multiplicity. With symbolic parameters only the
  /// root x = 0 can be read off.
  std::vector<std::pair<Rational, int>> rational_roots;
  /// Square-free part of the leading coefficient with the rational roots
  /// removed (1 when nothing is left).
  MultiPoly residual;
  /// Real roots of the residual, parameter-free case only.
  std::vector<RootInterval> irrational_roots;
};

/// Candidates x = c for vertical asymptotes: roots of the coefficient of the
/// highest power of y. Throws kInvalidArgument when F is free of y.
VerticalAsymptotes vertical_asymptotes(const MultiPoly& F);

enum class ConicKind { kEllipse, kParabola, kHyperbola, kDegenerate };
const char* conic_kind_name(ConicKind k);

struct ConicReport {
  ConicKind kind = ConicKind::kDegenerate;
  /// B^2 - 4AC of A x^2 + B xy + C y^2 + D x + E y + F.
  Rational discriminant;
  std::optional<std::array<Rational, 2>> center;
  /// Squared semi-axes along x and y for an axis-aligned central conic.
  std::optional<std::array<Rational, 2>> semi_axes_squared;
  std::string note;
};

/// Classifies a conic once bound. Throws kInvalidArgument unless the total
/// degree in x and y is exactly 2, kUnboundParameter when symbols remain.
ConicReport identify_conic(const MultiPoly& F, const Assignment& bindings = {});

struct ConicFit {
  /// Normalized conic through the points when the 5x6 system has rank 5.
  std::optional<MultiPoly> conic;
  int rank = 0;
};

ConicFit conic_through_5_points(const std::vector<std::array<Rational, 2>>& points);

struct InflectionCandidates {
  /// x'y'' - y'x'' (numerator, or its norm for a square-root point).
  MultiPoly numerator;
  /// The numerator vanishes identically (a line).
  bool all_parameters = false;
  std::vector<RootInterval> values;
};

/// Parameter values where the curvature may vanish. Candidates only:
/// every real root of the numerator is listed except excluded values.
/// Throws kUnboundParameter when symbols remain.
InflectionCandidates inflection_candidates(const ParametricPoint& point);

struct AnalysisOptions {
  IrreducibilityOptions irreducibility;
  Assignment bindings;
  /// When set, factors not on this point's curve are marked extraneous.
  std::optional<ParametricPoint> point;
};

struct AnalyzedFactor {
  PolyFactor factor;
  bool extraneous = false;
  std::string reason;
  std::optional<ConicReport> conic;
};

struct AnalysisReport {
  MultiPoly input;
  /// Input after binding.
  MultiPoly bound;
  std::vector<AnalyzedFactor> factors;
  IrreducibilityVerdict irreducibility;
  std::optional<SingularReport> singular;
  SymmetryFlags symmetry;
  std::optional<VerticalAsymptotes> asymptotes;
  std::optional<ConicReport> conic;
  std::vector<std::string> notes;
};

AnalysisReport analyze(const MultiPoly& F, const AnalysisOptions& options = {});

nlohmann::json to_json(const RootInterval& r);
nlohmann::json to_json(const SingularReport& r);
nlohmann::json to_json(const ConicReport& r);
nlohmann::json to_json(const AnalysisReport& r);

}  // namespace curvelab
