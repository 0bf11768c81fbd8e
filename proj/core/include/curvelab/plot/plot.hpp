#pragma once

#include <array>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "curvelab/catalog/catalog.hpp"
#include "curvelab/param/parametric.hpp"
#include "curvelab/poly/multipoly.hpp"

namespace curvelab {

using Point2 = std::array<double, 2>;

struct Viewport {
  double xmin = -1, xmax = 1, ymin = -1, ymax = 1;
  /// Throws kInvalidArgument unless both ranges are finite and nonempty.
  void validate() const;
  bool contains(const Point2& p) const { return p[0] >= xmin && p[0] <= xmax && p[1] >= ymin && p[1] <= ymax; }
};

struct Segment {
  Point2 a;
  Point2 b;
};

/// a*x + b*y + c = 0.
struct RefLine {
  double a = 0, b = 0, c = 0;
};

struct PlotLayer {
  std::string name;
  /// Style token: base, locus, implicit, construction, reference, or any
  /// other token (rendered with the default stroke).
  std::string style = "locus";
  std::vector<std::vector<Point2>> polylines;
  std::vector<Segment> segments;
  std::vector<RefLine> lines;
  std::vector<Point2> points;
};

struct PlotScene {
  std::string title;
  Viewport viewport;
  /// Same scale on both axes; otherwise each axis fills the canvas.
  bool orthonormal = false;
  int width = 640;
  int height = 480;
  std::vector<PlotLayer> layers;

  /// Viewport check plus finiteness of every datum.
  void validate() const;
};

/// Marching squares on a grid_n x grid_n grid of cells with linear
/// interpolation along sign changes. Saddle cells are resolved by the sign
/// at the cell centre. Throws kInvalidArgument for grid_n < 8 and
/// kUnboundParameter when F keeps symbols other than x and y.
std::vector<Segment> contour_implicit(const MultiPoly& F, const Assignment& bindings, const Viewport& viewport,
                                      int grid_n);

/// Samples the point on [lo, hi] (see trace_samples) and joins consecutive
/// samples of the same segment into polylines.
PlotLayer parametric_layer(const ParametricPoint& point, double lo, double hi, int samples, std::string name,
                           std::string style = "locus", double guard = 1e-3);

/// SVG 1.1 text. Numbers carry 4 decimals and elements follow layer order,
/// so equal scenes give byte-identical output.
std::string render_svg(const PlotScene& scene);

/// lo, ..., hi in `count` equal exact steps (count >= 2).
std::vector<Rational> sweep(const Rational& lo, const Rational& hi, int count);

struct FamilySpec {
  std::string program;  // construction DSL text
  Bindings bindings;    // fixed bindings; must leave only `parameter` free
  std::string parameter;
  std::vector<Rational> values;
  double lo = -10;
  double hi = 10;
  int samples = 800;
  Viewport viewport;
  bool orthonormal = false;
  /// Adds the base curve as the first layer (in every frame).
  bool include_base = true;
};

/// One scene with a locus layer per value, in the order of `values`.
PlotScene family_scene(const FamilySpec& spec, const Catalog& catalog = Catalog::builtin());
/// One scene per value.
std::vector<PlotScene> family_frames(const FamilySpec& spec, const Catalog& catalog = Catalog::builtin());

nlohmann::json to_json(const PlotScene& scene);

/// Reads a scene. Layers either carry data (polylines, segments, lines,
/// points) or a source that is evaluated here:
///   {"kind": "implicit", "polynomial": "...", "bindings": "a=2", "grid": 64}
///   {"kind": "parametric", "curve" | "construction" | "dsl": ..., "bindings": ...,
///    "range": [lo, hi], "samples": n}
/// Throws kValidation for malformed scenes.
PlotScene scene_from_json(const nlohmann::json& j, const Catalog& catalog = Catalog::builtin());

}  // namespace curvelab
