#include "curvelab/plot/plot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "curvelab/error.hpp"
#include "curvelab/locus/locus.hpp"

namespace curvelab {

void Viewport::validate() const {
  for (double v : {xmin, xmax, ymin, ymax}) {
    if (!std::isfinite(v)) throw Error(ErrorCode::kInvalidArgument, "viewport bounds must be finite");
  }
  if (!(xmin < xmax) || !(ymin < ymax)) throw Error(ErrorCode::kInvalidArgument, "viewport ranges must be nonempty");
}

void PlotScene::validate() const {
  viewport.validate();
  if (width < 16 || height < 16) throw Error(ErrorCode::kInvalidArgument, "canvas too small");
  auto finite = [](const Point2& p) { return std::isfinite(p[0]) && std::isfinite(p[1]); };
  for (const auto& l : layers) {
    bool ok = std::all_of(l.points.begin(), l.points.end(), finite);
    for (const auto& pl : l.polylines) ok = ok && std::all_of(pl.begin(), pl.end(), finite);
    for (const auto& s : l.segments) ok = ok && finite(s.a) && finite(s.b);
    for (const auto& r : l.lines) ok = ok && std::isfinite(r.a) && std::isfinite(r.b) && std::isfinite(r.c) && (r.a != 0 || r.b != 0);
    if (!ok) throw Error(ErrorCode::kInvalidArgument, "layer '" + l.name + "' has a non-finite or degenerate datum");
  }
}

namespace {

struct Monomial {
  double coeff;
  unsigned i;
  unsigned j;
};

Point2 lerp(const Point2& a, const Point2& b, double va, double vb) {
  const double t = va / (va - vb);
  return {a[0] + t * (b[0] - a[0]), a[1] + t * (b[1] - a[1])};
}

}  // namespace

std::vector<Segment> contour_implicit(const MultiPoly& F, const Assignment& bindings, const Viewport& vp,
                                      int grid_n) {
  if (grid_n < 8) throw Error(ErrorCode::kInvalidArgument, "the contour grid needs at least 8 cells per side");
  vp.validate();
  const MultiPoly G = F.substitute(bindings);
  for (const auto& v : G.variables()) {
    if (v != "x" && v != "y") throw Error(ErrorCode::kUnboundParameter, "bind '" + v + "' before plotting");
  }
  std::vector<Monomial> terms;
  for (const auto& t : G.terms()) terms.push_back({t.coeff.to_double(), G.exponent(t, "x"), G.exponent(t, "y")});
  const unsigned dx = static_cast<unsigned>(std::max(G.degree("x"), 0));
  const unsigned dy = static_cast<unsigned>(std::max(G.degree("y"), 0));
  auto eval = [&](double x, double y) {
    std::vector<double> xp(dx + 1, 1.0), yp(dy + 1, 1.0);
    for (unsigned k = 1; k <= dx; ++k) xp[k] = xp[k - 1] * x;
    for (unsigned k = 1; k <= dy; ++k) yp[k] = yp[k - 1] * y;
    double s = 0;
    for (const auto& m : terms) s += m.coeff * xp[m.i] * yp[m.j];
    return s;
  };

  const int n = grid_n;
  const std::size_t stride = static_cast<std::size_t>(n) + 1;
  std::vector<double> xs(stride), ys(stride), v(stride * stride);
  for (int i = 0; i <= n; ++i) {
    xs[static_cast<std::size_t>(i)] = vp.xmin + (vp.xmax - vp.xmin) * i / n;
    ys[static_cast<std::size_t>(i)] = vp.ymin + (vp.ymax - vp.ymin) * i / n;
  }
  for (std::size_t j = 0; j < stride; ++j) {
    for (std::size_t i = 0; i < stride; ++i) v[j * stride + i] = eval(xs[i], ys[j]);
  }

  std::vector<Segment> out;
  for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
    for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
      const Point2 c[4] = {{xs[i], ys[j]}, {xs[i + 1], ys[j]}, {xs[i + 1], ys[j + 1]}, {xs[i], ys[j + 1]}};
      const double f[4] = {v[j * stride + i], v[j * stride + i + 1], v[(j + 1) * stride + i + 1],
                           v[(j + 1) * stride + i]};
      if (!std::all_of(f, f + 4, [](double d) { return std::isfinite(d); })) continue;
      const int idx = (f[0] >= 0) | (f[1] >= 0) << 1 | (f[2] >= 0) << 2 | (f[3] >= 0) << 3;
      if (idx == 0 || idx == 15) continue;
      // Edges: 0 bottom, 1 right, 2 top, 3 left.
      auto edge = [&](int e) {
        switch (e) {
          case 0: return lerp(c[0], c[1], f[0], f[1]);
          case 1: return lerp(c[1], c[2], f[1], f[2]);
          case 2: return lerp(c[3], c[2], f[3], f[2]);
          default: return lerp(c[0], c[3], f[0], f[3]);
        }
      };
      auto add = [&](int e1, int e2) {
        const Point2 a = edge(e1), b = edge(e2);
        if (a != b) out.push_back({a, b});
      };
      const double centre = eval((xs[i] + xs[i + 1]) / 2, (ys[j] + ys[j + 1]) / 2);
      switch (idx) {
        case 1: case 14: add(3, 0); break;
        case 2: case 13: add(0, 1); break;
        case 3: case 12: add(3, 1); break;
        case 4: case 11: add(1, 2); break;
        case 6: case 9: add(0, 2); break;
        case 7: case 8: add(3, 2); break;
        case 5:
          if (centre >= 0) { add(0, 1); add(2, 3); } else { add(3, 0); add(1, 2); }
          break;
        case 10:
          if (centre >= 0) { add(3, 0); add(1, 2); } else { add(0, 1); add(2, 3); }
          break;
        default: break;
      }
    }
  }
  return out;
}

PlotLayer parametric_layer(const ParametricPoint& point, double lo, double hi, int samples, std::string name,
                           std::string style, double guard) {
  PlotLayer layer;
  layer.name = std::move(name);
  layer.style = std::move(style);
  int current = -1;
  for (const auto& s : trace_samples(point, lo, hi, samples, guard)) {
    if (s.segment != current) {
      layer.polylines.emplace_back();
      current = s.segment;
    }
    layer.polylines.back().push_back({s.x, s.y});
  }
  return layer;
}

namespace {

std::string num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s(buf);
  if (s == "-0.0000") s = "0.0000";
  return s;
}

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Stroke {
  const char* color;
  double width;
  const char* dash;
};

Stroke stroke_for(const std::string& token) {
  static const char* const kSeries[] = {"#c0392b", "#2980b9", "#27ae60", "#8e44ad",
                                        "#d35400", "#16a085", "#2c3e50", "#f39c12"};
  if (token == "base") return {"#4a6fa5", 1.5, ""};
  if (token == "locus") return {"#c0392b", 2.0, ""};
  if (token == "implicit") return {"#27ae60", 1.5, ""};
  if (token == "construction") return {"#7f8c8d", 1.0, "4 3"};
  if (token == "reference") return {"#34495e", 1.0, "2 2"};
  if (token.rfind("series-", 0) == 0) {
    const int k = std::atoi(token.c_str() + 7);
    return {kSeries[static_cast<std::size_t>(std::abs(k)) % 8], 1.75, ""};
  }
  return {"#000000", 1.5, ""};
}

// Liang-Barsky clipping of a segment to the viewport; false when outside.
bool clip(const Viewport& vp, Point2& a, Point2& b) {
  double t0 = 0, t1 = 1;
  const double dx = b[0] - a[0], dy = b[1] - a[1];
  const double p[4] = {-dx, dx, -dy, dy};
  const double q[4] = {a[0] - vp.xmin, vp.xmax - a[0], a[1] - vp.ymin, vp.ymax - a[1]};
  for (int k = 0; k < 4; ++k) {
    if (p[k] == 0) {
      if (q[k] < 0) return false;
      continue;
    }
    const double t = q[k] / p[k];
    if (p[k] < 0) {
      t0 = std::max(t0, t);
    } else {
      t1 = std::min(t1, t);
    }
    if (t0 > t1) return false;
  }
  const Point2 a0 = a;
  a = {a0[0] + t0 * dx, a0[1] + t0 * dy};
  b = {a0[0] + t1 * dx, a0[1] + t1 * dy};
  return true;
}

class Canvas {
 public:
  explicit Canvas(const PlotScene& s) : vp_(s.viewport) {
    constexpr double kMargin = 24;
    const double w = s.width - 2 * kMargin, h = s.height - 2 * kMargin;
    sx_ = w / (vp_.xmax - vp_.xmin);
    sy_ = h / (vp_.ymax - vp_.ymin);
    ox_ = kMargin;
    oy_ = kMargin;
    if (s.orthonormal) {
      const double k = std::min(sx_, sy_);
      ox_ += (w - k * (vp_.xmax - vp_.xmin)) / 2;
      oy_ += (h - k * (vp_.ymax - vp_.ymin)) / 2;
      sx_ = sy_ = k;
    }
  }
  double X(double x) const { return ox_ + (x - vp_.xmin) * sx_; }
  double Y(double y) const { return oy_ + (vp_.ymax - y) * sy_; }
  std::string px(double x) const { return num(X(x)); }
  std::string py(double y) const { return num(Y(y)); }
  std::string pt(const Point2& p) const { return px(p[0]) + "," + py(p[1]); }

 private:
  Viewport vp_;
  double sx_, sy_, ox_, oy_;
};

std::vector<std::vector<Point2>> clip_polyline(const Viewport& vp, const std::vector<Point2>& line) {
  std::vector<std::vector<Point2>> runs;
  bool open = false;
  for (std::size_t k = 1; k < line.size(); ++k) {
    Point2 a = line[k - 1], b = line[k];
    if (!clip(vp, a, b)) {
      open = false;
      continue;
    }
    const bool continues = open && a == line[k - 1];
    if (!continues) runs.push_back({a});
    runs.back().push_back(b);
    open = b == line[k];
  }
  return runs;
}

bool line_segment(const Viewport& vp, const RefLine& l, Point2& a, Point2& b) {
  if (std::abs(l.b) >= std::abs(l.a)) {
    a = {vp.xmin, -(l.a * vp.xmin + l.c) / l.b};
    b = {vp.xmax, -(l.a * vp.xmax + l.c) / l.b};
  } else {
    a = {-(l.b * vp.ymin + l.c) / l.a, vp.ymin};
    b = {-(l.b * vp.ymax + l.c) / l.a, vp.ymax};
  }
  return clip(vp, a, b);
}

}  // namespace

std::string render_svg(const PlotScene& scene) {
  scene.validate();
  const Viewport& vp = scene.viewport;
  const Canvas cv(scene);
  std::ostringstream o;
  o << "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n";
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << scene.width << "\" height=\""
    << scene.height << "\" viewBox=\"0 0 " << scene.width << " " << scene.height << "\">\n";
  if (!scene.title.empty()) o << "<title>" << escape(scene.title) << "</title>\n";
  o << "<rect x=\"0\" y=\"0\" width=\"" << scene.width << "\" height=\"" << scene.height
    << "\" fill=\"#ffffff\"/>\n";

  o << "<g id=\"axes\" stroke=\"#b0b0b0\" stroke-width=\"1.0000\" fill=\"none\" font-family=\"sans-serif\" "
       "font-size=\"10\">\n";
  o << "<rect x=\"" << cv.px(vp.xmin) << "\" y=\"" << cv.py(vp.ymax) << "\" width=\""
    << num(cv.X(vp.xmax) - cv.X(vp.xmin)) << "\" height=\""
    << num(cv.Y(vp.ymin) - cv.Y(vp.ymax)) << "\"/>\n";
  if (vp.ymin <= 0 && 0 <= vp.ymax) {
    o << "<line x1=\"" << cv.px(vp.xmin) << "\" y1=\"" << cv.py(0) << "\" x2=\"" << cv.px(vp.xmax) << "\" y2=\""
      << cv.py(0) << "\" stroke=\"#606060\"/>\n";
  }
  if (vp.xmin <= 0 && 0 <= vp.xmax) {
    o << "<line x1=\"" << cv.px(0) << "\" y1=\"" << cv.py(vp.ymin) << "\" x2=\"" << cv.px(0) << "\" y2=\""
      << cv.py(vp.ymax) << "\" stroke=\"#606060\"/>\n";
  }
  o << "<text x=\"" << cv.px(vp.xmin) << "\" y=\"" << num(cv.Y(vp.ymin) + 14)
    << "\" stroke=\"none\" fill=\"#606060\">" << num(vp.xmin) << "</text>\n";
  o << "<text x=\"" << cv.px(vp.xmax) << "\" y=\"" << num(cv.Y(vp.ymin) + 14)
    << "\" stroke=\"none\" fill=\"#606060\" text-anchor=\"end\">" << num(vp.xmax) << "</text>\n";
  o << "<text x=\"" << num(cv.X(vp.xmin) + 2) << "\" y=\"" << num(cv.Y(vp.ymax) + 10)
    << "\" stroke=\"none\" fill=\"#606060\">" << num(vp.ymax) << "</text>\n";
  o << "</g>\n";

  for (std::size_t k = 0; k < scene.layers.size(); ++k) {
    const PlotLayer& l = scene.layers[k];
    const Stroke s = stroke_for(l.style);
    o << "<g id=\"layer-" << k << "\" class=\"" << escape(l.style) << "\" stroke=\"" << s.color
      << "\" stroke-width=\"" << num(s.width) << "\" fill=\"none\"";
    if (*s.dash) o << " stroke-dasharray=\"" << s.dash << "\"";
    o << ">\n";
    if (!l.name.empty()) o << "<title>" << escape(l.name) << "</title>\n";
    for (const auto& line : l.polylines) {
      for (const auto& run : clip_polyline(vp, line)) {
        o << "<polyline points=\"";
        for (std::size_t i = 0; i < run.size(); ++i) o << (i ? " " : "") << cv.pt(run[i]);
        o << "\"/>\n";
      }
    }
    if (!l.segments.empty()) {
      std::string d;
      for (const auto& seg : l.segments) {
        Point2 a = seg.a, b = seg.b;
        if (!clip(vp, a, b)) continue;
        d += (d.empty() ? "M " : " M ") + cv.px(a[0]) + " " + cv.py(a[1]) + " L " + cv.px(b[0]) + " " + cv.py(b[1]);
      }
      if (!d.empty()) o << "<path d=\"" << d << "\"/>\n";
    }
    for (const auto& rl : l.lines) {
      Point2 a, b;
      if (!line_segment(vp, rl, a, b)) continue;
      o << "<line x1=\"" << cv.px(a[0]) << "\" y1=\"" << cv.py(a[1]) << "\" x2=\"" << cv.px(b[0]) << "\" y2=\""
        << cv.py(b[1]) << "\"/>\n";
    }
    for (const auto& p : l.points) {
      if (!vp.contains(p)) continue;
      o << "<circle cx=\"" << cv.px(p[0]) << "\" cy=\"" << cv.py(p[1]) << "\" r=\"3.0000\" fill=\"" << s.color
        << "\"/>\n";
    }
    o << "</g>\n";
  }
  o << "</svg>\n";
  return o.str();
}

std::vector<Rational> sweep(const Rational& lo, const Rational& hi, int count) {
  if (count < 2) throw Error(ErrorCode::kInvalidArgument, "a sweep needs at least two values");
  if (!(lo < hi)) throw Error(ErrorCode::kEmptyRange, "empty sweep range");
  std::vector<Rational> out;
  for (int k = 0; k < count; ++k) out.push_back(lo + (hi - lo) * Rational(k) / Rational(count - 1));
  return out;
}

namespace {

struct FamilyMember {
  CompiledConstruction compiled;
  std::string label;
};

FamilyMember member(const FamilySpec& spec, const Rational& value, const Catalog& catalog) {
  Bindings b = spec.bindings;
  b[spec.parameter] = parse_expression(value.to_string());
  return {compile(parse_construction(spec.program), catalog, b), spec.parameter + "=" + value.to_string()};
}

PlotLayer base_layer(const FamilySpec& spec, const FamilyMember& m) {
  return parametric_layer(*m.compiled.mover, spec.lo, spec.hi, spec.samples, m.compiled.base_curve, "base");
}

}  // namespace

PlotScene family_scene(const FamilySpec& spec, const Catalog& catalog) {
  if (spec.values.empty()) throw Error(ErrorCode::kInvalidArgument, "a family needs at least one value");
  PlotScene scene;
  scene.viewport = spec.viewport;
  scene.orthonormal = spec.orthonormal;
  scene.title = "family in " + spec.parameter;
  for (std::size_t k = 0; k < spec.values.size(); ++k) {
    const FamilyMember m = member(spec, spec.values[k], catalog);
    if (k == 0 && spec.include_base && m.compiled.mover) scene.layers.push_back(base_layer(spec, m));
    scene.layers.push_back(parametric_layer(m.compiled.point, spec.lo, spec.hi, spec.samples, m.label,
                                            "series-" + std::to_string(k)));
  }
  return scene;
}

std::vector<PlotScene> family_frames(const FamilySpec& spec, const Catalog& catalog) {
  std::vector<PlotScene> frames;
  for (std::size_t k = 0; k < spec.values.size(); ++k) {
    const FamilyMember m = member(spec, spec.values[k], catalog);
    PlotScene scene;
    scene.viewport = spec.viewport;
    scene.orthonormal = spec.orthonormal;
    scene.title = m.label + " (frame " + std::to_string(k + 1) + " of " + std::to_string(spec.values.size()) + ")";
    if (spec.include_base && m.compiled.mover) scene.layers.push_back(base_layer(spec, m));
    scene.layers.push_back(parametric_layer(m.compiled.point, spec.lo, spec.hi, spec.samples, m.label, "locus"));
    frames.push_back(std::move(scene));
  }
  return frames;
}

}  // namespace curvelab
