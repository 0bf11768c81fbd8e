#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <regex>
#include <set>

#include "curvelab/error.hpp"
#include "curvelab/io/expr.hpp"
#include "curvelab/locus/locus.hpp"
#include "curvelab/plot/plot.hpp"

namespace curvelab {
namespace {

MultiPoly P(std::string_view s) { return parse_poly(s); }

double eval(const MultiPoly& F, const Point2& p) { return F.evaluate_double({{"x", p[0]}, {"y", p[1]}}); }

// Largest |grad F| over a box, bounded term by term.
double gradient_bound(const MultiPoly& F, const Viewport& vp) {
  const double X = std::max(std::abs(vp.xmin), std::abs(vp.xmax));
  const double Y = std::max(std::abs(vp.ymin), std::abs(vp.ymax));
  double bound = 0;
  for (const char* v : {"x", "y"}) {
    const MultiPoly d = F.derivative(v);
    double s = 0;
    for (const auto& t : d.terms()) {
      double m = std::abs(t.coeff.to_double());
      for (const auto& [w, e] : d.powers(t)) m *= std::pow(w == "x" ? X : Y, e);
      s += m;
    }
    bound += s;
  }
  return bound;
}

TEST(Contour, CircleResidualAtGrid64) {
  const MultiPoly F = P("x^2 + y^2 - 1");
  const Viewport vp{-2, 2, -2, 2};
  const auto segs = contour_implicit(F, {}, vp, 64);
  ASSERT_FALSE(segs.empty());
  const double cell = 4.0 / 64;
  for (const auto& s : segs) {
    for (const auto& p : {s.a, s.b}) {
      EXPECT_LE(std::abs(eval(F, p)), 0.05);
      EXPECT_LE(std::abs(eval(F, p)), gradient_bound(F, vp) * cell);
    }
  }
  // Closed: every endpoint is shared by exactly two segments.
  std::map<std::pair<long, long>, int> degree;
  for (const auto& s : segs) {
    for (const auto& p : {s.a, s.b}) ++degree[{std::lround(p[0] * 1e9), std::lround(p[1] * 1e9)}];
  }
  for (const auto& [k, d] : degree) EXPECT_EQ(d, 2);
}

TEST(Contour, EmptyAndErrors) {
  EXPECT_TRUE(contour_implicit(P("x^2 + y^2 + 1"), {}, {-2, 2, -2, 2}, 16).empty());
  EXPECT_THROW(contour_implicit(P("x - y"), {}, {-1, 1, -1, 1}, 4), Error);
  EXPECT_THROW(contour_implicit(P("x - a"), {}, {-1, 1, -1, 1}, 16), Error);
  EXPECT_THROW(contour_implicit(P("x - y"), {}, {1, 1, -1, 1}, 16), Error);
}

TEST(Contour, KulpBranchesStayOffTheAxis) {
  const MultiPoly F = P("x^2*y^2 + r^2*x^2 - r^4");
  const Viewport vp{-5, 5, -20, 20};
  for (int grid : {64, 63}) {
    const auto segs = contour_implicit(F, {{"r", 4}}, vp, grid);
    bool left = false, right = false;
    for (const auto& s : segs) {
      EXPECT_GE(s.a[0] * s.b[0], 0.0);
      EXPECT_NE(s.a[0], 0.0);
      left = left || s.a[0] < 0;
      right = right || s.a[0] > 0;
    }
    EXPECT_TRUE(left && right);
    // Mirror structure: as many segments on each side.
    const auto n_left = std::count_if(segs.begin(), segs.end(), [](const Segment& s) { return s.a[0] < 0; });
    EXPECT_EQ(2 * static_cast<std::size_t>(n_left), segs.size());
  }
}

TEST(Contour, GeronoNodeResidual) {
  const MultiPoly F = P("x^4 - 4*x^2 + 4*y^2");
  const Viewport vp{-2.5, 2.5, -1.5, 1.5};
  const auto segs = contour_implicit(F, {}, vp, 64);
  ASSERT_FALSE(segs.empty());
  const double cell = std::max(5.0, 3.0) / 64;
  for (const auto& s : segs) EXPECT_LE(std::abs(eval(F, s.a)), gradient_bound(F, vp) * cell);
}

PlotScene circle_scene() {
  PlotScene scene;
  scene.viewport = {-2, 2, -2, 2};
  scene.orthonormal = true;
  scene.title = "circle & co";
  PlotLayer implicit;
  implicit.name = "x^2 + y^2 - 1";
  implicit.style = "implicit";
  implicit.segments = contour_implicit(P("x^2 + y^2 - 1"), {}, scene.viewport, 64);
  scene.layers.push_back(implicit);
  scene.layers.push_back(parametric_layer(catalog_get("circle", parse_bindings("r=1")).mover, -10, 10, 200, "circle",
                                          "base"));
  PlotLayer ref;
  ref.style = "reference";
  ref.lines.push_back({1, 0, -1});
  ref.points.push_back({0, 0});
  ref.points.push_back({5, 5});
  scene.layers.push_back(ref);
  return scene;
}

TEST(Svg, ByteStable) {
  const std::string a = render_svg(circle_scene());
  const std::string b = render_svg(circle_scene());
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("<?xml", 0), 0u);
  EXPECT_NE(a.find("version=\"1.1\""), std::string::npos);
  EXPECT_NE(a.find("circle &amp; co"), std::string::npos);
  // Every number printed with exactly four decimals.
  const std::regex number(R"(-?\d+\.(\d+))");
  const std::string body = a.substr(a.find("viewBox"));
  for (auto it = std::sregex_iterator(body.begin(), body.end(), number); it != std::sregex_iterator(); ++it) {
    EXPECT_EQ((*it)[1].length(), 4u) << (*it)[0];
  }
  EXPECT_EQ(a.find("-0.0000"), std::string::npos);
  // The point outside the viewport is dropped.
  std::size_t circles = 0;
  for (std::size_t at = a.find("<circle "); at != std::string::npos; at = a.find("<circle ", at + 1)) ++circles;
  EXPECT_EQ(circles, 1u);
}

TEST(Svg, EmptySceneHasAxesOnly) {
  PlotScene scene;
  scene.viewport = {-1, 3, -2, 2};
  const std::string svg = render_svg(scene);
  EXPECT_NE(svg.find("<g id=\"axes\""), std::string::npos);
  EXPECT_EQ(svg.find("layer-0"), std::string::npos);
  EXPECT_EQ(svg.substr(svg.size() - 7), "</svg>\n");
}

TEST(Svg, ClipsPolylinesToViewport) {
  PlotScene scene;
  scene.viewport = {0, 1, 0, 1};
  scene.width = 148;
  scene.height = 148;  // 100 px plot area, 24 px margins
  PlotLayer l;
  l.polylines.push_back({{-1, 0.5}, {0.5, 0.5}, {0.5, 2}, {0.75, 2}, {0.75, 0.25}});
  scene.layers.push_back(l);
  const std::string svg = render_svg(scene);
  EXPECT_NE(svg.find("<polyline points=\"24.0000,74.0000 74.0000,74.0000 74.0000,24.0000\"/>"), std::string::npos);
  EXPECT_NE(svg.find("<polyline points=\"99.0000,24.0000 99.0000,99.0000\"/>"), std::string::npos);
}

TEST(Svg, RejectsInvalidScenes) {
  PlotScene scene;
  scene.viewport = {0, 1, 0, 1};
  PlotLayer l;
  l.points.push_back({NAN, 0});
  scene.layers.push_back(l);
  EXPECT_THROW(render_svg(scene), Error);
  scene.layers.clear();
  scene.viewport = {0, 0, 0, 1};
  EXPECT_THROW(render_svg(scene), Error);
}

TEST(Parametric, LayersSkipExcludedValues) {
  const ParametricPoint kulp = compile_construction(parse_construction(Catalog::builtin().construction("kulp").text),
                                                    Catalog::builtin(), parse_bindings("r=1"));
  const double guard = 0.01;
  const PlotLayer l = parametric_layer(kulp, -3, 3, 601, "kulp", "locus", guard);
  EXPECT_EQ(l.polylines.size(), 3u);  // split at u = -1 and u = 1
  for (const auto& pl : l.polylines) {
    for (const auto& p : pl) EXPECT_NEAR(p[0] * p[0] * p[1] * p[1] + p[0] * p[0], 1.0, 1e-9);
  }
}

FamilySpec secant_family() {
  FamilySpec spec;
  spec.program = Catalog::builtin().construction("secant").text;
  spec.bindings = parse_bindings("r=1");
  spec.parameter = "d";
  spec.values = {Rational(1, 2), 1, 2, 3};
  spec.lo = -0.95;
  spec.hi = 0.95;
  spec.samples = 39;
  spec.viewport = {-1.5, 1.5, -8, 8};
  return spec;
}

TEST(Family, NestedBranchesOrderedByD) {
  const PlotScene scene = family_scene(secant_family());
  ASSERT_EQ(scene.layers.size(), 5u);
  EXPECT_EQ(scene.layers[0].style, "base");
  for (std::size_t k = 1; k < 5; ++k) EXPECT_EQ(scene.layers[k].style, "series-" + std::to_string(k - 1));
  EXPECT_EQ(scene.layers[1].name, "d=1/2");
  // Same mover value, same x; |y| grows with d (innermost to outermost).
  for (std::size_t i = 0; i < scene.layers[1].polylines[0].size(); ++i) {
    double prev = -1;
    for (std::size_t k = 1; k < 5; ++k) {
      const Point2 p = scene.layers[k].polylines[0][i];
      EXPECT_DOUBLE_EQ(p[0], scene.layers[1].polylines[0][i][0]);
      if (p[1] != 0) {
        EXPECT_GT(std::abs(p[1]), prev);
        prev = std::abs(p[1]);
      }
    }
  }
}

TEST(Family, FramesAreSeparateDocuments) {
  FamilySpec spec = secant_family();
  spec.values = sweep(Rational(1, 2), 4, 8);
  EXPECT_EQ(spec.values[1], Rational(1));
  const auto frames = family_frames(spec);
  ASSERT_EQ(frames.size(), 8u);
  std::set<std::string> docs;
  for (const auto& f : frames) docs.insert(render_svg(f));
  EXPECT_EQ(docs.size(), 8u);
  EXPECT_NE(frames[7].title.find("frame 8 of 8"), std::string::npos);
  EXPECT_THROW(sweep(1, 1, 3), Error);
}

TEST(SceneJson, RoundTripAndSources) {
  const PlotScene scene = circle_scene();
  const PlotScene back = scene_from_json(to_json(scene));
  EXPECT_EQ(render_svg(back), render_svg(scene));

  const nlohmann::json spec = nlohmann::json::parse(R"j({
    "viewport": {"xmin": -3, "xmax": 3, "ymin": -6, "ymax": 6},
    "layers": [
      {"curve": "circle", "bindings": "r=2", "range": [-20, 20], "samples": 100},
      {"construction": "kulp", "bindings": {"r": 2}, "range": [-0.9, 0.9], "samples": 50},
      {"polynomial": "x^2*y^2 + r^2*x^2 - r^4", "bindings": "r=2", "grid": 32},
      {"kind": "reference", "lines": [[1, 0, -2]], "style": "construction"}
    ]})j");
  const PlotScene s = scene_from_json(spec);
  ASSERT_EQ(s.layers.size(), 4u);
  EXPECT_EQ(s.layers[0].style, "base");
  EXPECT_EQ(s.layers[1].polylines.size(), 1u);
  EXPECT_EQ(s.layers[1].polylines[0].size(), 50u);
  EXPECT_EQ(s.layers[2].style, "implicit");
  EXPECT_FALSE(s.layers[2].segments.empty());
  EXPECT_EQ(s.layers[3].style, "construction");
  for (const auto& seg : s.layers[2].segments) {
    EXPECT_NEAR(seg.a[0] * seg.a[0] * (seg.a[1] * seg.a[1] + 4), 16.0, 3.0);
  }
}

TEST(SceneJson, Validation) {
  const auto code = [](const char* text) {
    try {
      scene_from_json(nlohmann::json::parse(text));
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::kSyntax;
  };
  EXPECT_EQ(code(R"({"layers": []})"), ErrorCode::kValidation);
  EXPECT_EQ(code(R"({"viewport": {"xmin": 1, "xmax": 0, "ymin": 0, "ymax": 1}})"), ErrorCode::kValidation);
  EXPECT_EQ(code(R"({"viewport": {"xmin": 0, "xmax": 1, "ymin": 0, "ymax": 1}, "layers": [{"kind": "pie"}]})"),
            ErrorCode::kValidation);
  EXPECT_EQ(code(R"({"viewport": {"xmin": 0, "xmax": 1, "ymin": 0, "ymax": 1}, "layers": [{"points": [[1]]}]})"),
            ErrorCode::kValidation);
  EXPECT_EQ(code(R"({"viewport": {"xmin": 0, "xmax": 1, "ymin": 0, "ymax": 1},
                     "layers": [{"polynomial": "x - a"}]})"),
            ErrorCode::kUnboundParameter);
}

}  // namespace
}  // namespace curvelab
