#pragma once

#include <optional>
#include <string>
#include <vector>

#include "curvelab/elim/deadline.hpp"
#include "curvelab/param/parametric.hpp"
#include "curvelab/poly/multipoly.hpp"

namespace curvelab {

enum class ElimMethod { kResultant, kGroebner, kBoth };

const char* elim_method_name(ElimMethod m);
/// Accepts "resultant", "groebner", "both"; throws kInvalidArgument otherwise.
ElimMethod parse_elim_method(std::string_view text);

struct RemovedFactor {
  MultiPoly factor;
  std::string reason;
};

struct Provenance {
  std::string construction;
  /// Path that produced `defining` ("resultant", "groebner" or "direct").
  std::string path;
  std::vector<RemovedFactor> removed;
  /// Gröbner path only: the elimination-ideal generators that were not chosen.
  std::vector<MultiPoly> other_generators;
  /// Set when both paths ran to completion.
  std::optional<bool> paths_agree;
  std::vector<std::string> notes;
};

struct ImplicitCurve {
  /// Primitive with respect to {x, y}, integer coefficients, positive
  /// leading coefficient in canonical order.
  MultiPoly defining;
  Provenance provenance;
  int total_degree = 0;  // over all variables
  int degree_xy = 0;     // over {x, y}
  int degree_x = 0;
  int degree_y = 0;
};

struct ImplicitizeOptions {
  ElimMethod method = ElimMethod::kResultant;
  Deadline deadline = Deadline::after(kDefaultEliminationBudget);
  std::string construction;
};

/// Eliminates the point's parameter. The result vanishes identically on the
/// parametrization (checked with verify_on_curve); pure-parameter content,
/// repeated factors and factors free of x or of y that fail the check are
/// stripped and recorded in the provenance.
ImplicitCurve implicitize(const ParametricPoint& point, const ImplicitizeOptions& options = {});

/// The stripping step on its own: `candidate` must vanish on the point.
ImplicitCurve clean_candidate(const MultiPoly& candidate, const ParametricPoint& point, std::string path);

}  // namespace curvelab
