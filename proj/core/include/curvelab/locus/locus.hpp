#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "curvelab/catalog/catalog.hpp"
#include "curvelab/io/construction.hpp"
#include "curvelab/param/parametric.hpp"

namespace curvelab {

struct GeomPoint {
  SurdFunc x;
  SurdFunc y;
};

/// alpha*x + beta*y + gamma = 0, coefficients in the mover parameter.
struct GeomLine {
  SurdFunc alpha;
  SurdFunc beta;
  SurdFunc gamma;
};

using GeomObject = std::variant<GeomPoint, GeomLine>;

struct CompiledConstruction {
  /// The traced point with every degenerate parameter value excluded.
  ParametricPoint point;
  /// Every named step in program order (macro-generated names included).
  std::vector<std::pair<std::string, GeomObject>> objects;
  /// Catalog curve the mover runs on; empty for a program without on_curve.
  std::string base_curve;
  /// The on_curve point (unset for a program without on_curve).
  std::optional<ParametricPoint> mover;
};

/// Evaluates the program's steps symbolically. Program parameters stay
/// symbolic unless bound in `bindings`. Throws kDegenerateConstruction when
/// an intersection or a line through two points fails for every parameter
/// value; isolated failures become excluded values instead.
CompiledConstruction compile(const ConstructionProgram& program, const Catalog& catalog = Catalog::builtin(),
                             const Bindings& bindings = {});

ParametricPoint compile_construction(const ConstructionProgram& program,
                                     const Catalog& catalog = Catalog::builtin(), const Bindings& bindings = {});

/// (x0, c*y0/x0): the locus of M for the line x = c. Throws kCurveOnAxis
/// when x0 vanishes identically and kInvalidArgument when c is zero or
/// depends on the point's parameter.
ParametricPoint hyperbolism(const ParametricPoint& base, const SurdFunc& c);
/// (x0, x0*y0/c), the inverse map.
ParametricPoint antihyperbolism(const ParametricPoint& base, const SurdFunc& c);

/// Convenience forms on a catalog curve, e.g. ("ellipse", {}, "a").
ParametricPoint hyperbolism(std::string_view curve, const Bindings& bindings, std::string_view line_x,
                            const Catalog& catalog = Catalog::builtin());
ParametricPoint antihyperbolism(std::string_view curve, const Bindings& bindings, std::string_view line_x,
                                const Catalog& catalog = Catalog::builtin());

struct TraceSample {
  double u = 0;
  double x = 0;
  double y = 0;
  /// Increments after every gap (excluded value or undefined sample), so
  /// consecutive samples with the same segment may be joined.
  int segment = 0;
};

/// n equally spaced parameter values in [lo, hi], dropping those within
/// `guard` of a real excluded value or where the point is not real.
/// The point must have no symbolic parameters left (kUnboundParameter).
std::vector<TraceSample> trace_samples(const ParametricPoint& point, double lo, double hi, int n,
                                       double guard = 1e-3);

/// Real excluded parameter values of a fully bound point, ascending.
std::vector<double> excluded_real_values(const ParametricPoint& point);

}  // namespace curvelab
