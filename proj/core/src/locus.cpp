#include "curvelab/locus/locus.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>

#include "curvelab/error.hpp"
#include "curvelab/poly/gcd.hpp"
#include "curvelab/poly/upoly.hpp"

namespace curvelab {

namespace {

// Polynomial vanishing wherever v does (up to extra roots for a surd).
MultiPoly zero_locus(const SurdFunc& v) {
  if (v.is_rational()) return v.rational_part().numer();
  return v.norm().numer();
}

class Compiler {
 public:
  Compiler(const Catalog& catalog, const Bindings& bindings) : catalog_(catalog), bindings_(bindings) {}

  CompiledConstruction run(const ConstructionProgram& program) {
    for (const auto& step : program.steps) {
      loc_ = step.loc;
      if (step.kind == ConstructionStep::Kind::kPoint) {
        GeomPoint p = point(step.point);
        points_[step.name] = p;
        result_.objects.emplace_back(step.name, p);
      } else {
        GeomLine l = line(step.line);
        lines_[step.name] = l;
        result_.objects.emplace_back(step.name, l);
      }
    }
    const GeomPoint& traced = points_.at(program.traced);
    ParametricPoint out(traced.x, traced.y, parameter_);
    for (const auto& e : excluded_) out.exclude(e);
    out.notes = notes_;
    if (const auto lim = out.limit_at_infinity()) {
      out.notes.push_back("the parameter value at infinity is not reached; limit point (" +
                          lim->first.to_string() + ", " + lim->second.to_string() + ")");
    }
    result_.point = std::move(out);
    return std::move(result_);
  }

 private:
  [[noreturn]] void degenerate(const std::string& what) const {
    throw Error(ErrorCode::kDegenerateConstruction,
                "line " + std::to_string(loc_.line) + ": " + what + " for every value of the parameter", loc_);
  }

  SurdFunc value(const ExprAst& ast) const { return ast_to_surd(substitute_variables(ast, bindings_)); }

  GeomPoint point_ref(const PointRef& ref) const {
    if (ref.literal) return {value(ref.literal->first), value(ref.literal->second)};
    return points_.at(ref.name);
  }

  GeomLine line_ref(const LineRef& ref) {
    if (ref.inline_expr) return line(*ref.inline_expr);
    return lines_.at(ref.name);
  }

  GeomLine line(const LineExpr& e) {
    using K = LineExpr::Kind;
    switch (e.kind) {
      case K::kVertical: return {SurdFunc(1), SurdFunc(0), -value(e.value)};
      case K::kHorizontal: return {SurdFunc(0), SurdFunc(1), -value(e.value)};
      case K::kVerticalThrough: return {SurdFunc(1), SurdFunc(0), -point_ref(e.a).x};
      case K::kHorizontalThrough: return {SurdFunc(0), SurdFunc(1), -point_ref(e.a).y};
      case K::kThrough: {
        const GeomPoint a = point_ref(e.a), b = point_ref(e.b);
        GeomLine l{a.y - b.y, b.x - a.x, a.x * b.y - b.x * a.y};
        if (l.alpha.is_zero() && l.beta.is_zero()) degenerate("line_through joins coincident points");
        excluded_.push_back(poly_gcd(zero_locus(l.alpha), zero_locus(l.beta)));
        return l;
      }
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown line kind");
  }

  GeomPoint point(const PointExpr& e) {
    using K = PointExpr::Kind;
    switch (e.kind) {
      case K::kLiteral: return {value(e.x), value(e.y)};
      case K::kOnCurve: {
        Bindings b;
        for (const auto& [k, v] : e.curve.bindings) b[k] = substitute_variables(v, bindings_);
        const CatalogEntry entry = catalog_.get(e.curve.name, b);
        parameter_ = entry.mover.parameter;
        result_.base_curve = entry.name;
        result_.mover = entry.mover;
        for (const auto& x : entry.mover.excluded) excluded_.push_back(x);
        for (const auto& n : entry.notes) notes_.push_back(entry.name + ": " + n);
        return {entry.mover.x, entry.mover.y};
      }
      case K::kIntersect: {
        const GeomLine l1 = line_ref(e.first), l2 = line_ref(e.second);
        const SurdFunc det = l1.alpha * l2.beta - l2.alpha * l1.beta;
        if (det.is_zero()) degenerate("the two lines are parallel");
        excluded_.push_back(zero_locus(det));
        return {(l1.beta * l2.gamma - l2.beta * l1.gamma) / det, (l2.alpha * l1.gamma - l1.alpha * l2.gamma) / det};
      }
    }
    throw Error(ErrorCode::kInvalidArgument, "unknown point kind");
  }

  const Catalog& catalog_;
  const Bindings& bindings_;
  SourceLocation loc_;
  std::string parameter_ = "u";
  std::map<std::string, GeomPoint> points_;
  std::map<std::string, GeomLine> lines_;
  std::vector<MultiPoly> excluded_;
  std::vector<std::string> notes_;
  CompiledConstruction result_;
};

void check_line_constant(const ParametricPoint& base, const SurdFunc& c) {
  if (c.is_zero()) throw Error(ErrorCode::kInvalidArgument, "the line x = 0 passes through the centre O");
  if (c.depends_on(base.parameter)) {
    throw Error(ErrorCode::kInvalidArgument, "the line x = c must not depend on '" + base.parameter + "'");
  }
}

ParametricPoint with_exclusions(SurdFunc x, SurdFunc y, const ParametricPoint& base) {
  ParametricPoint out(std::move(x), std::move(y), base.parameter);
  for (const auto& e : base.excluded) out.exclude(e);
  out.notes = base.notes;
  return out;
}

SurdFunc line_constant(std::string_view line_x, const Bindings& bindings) {
  return ast_to_surd(substitute_variables(parse_expression(line_x), bindings));
}

}  // namespace

CompiledConstruction compile(const ConstructionProgram& program, const Catalog& catalog, const Bindings& bindings) {
  return Compiler(catalog, bindings).run(program);
}

ParametricPoint compile_construction(const ConstructionProgram& program, const Catalog& catalog,
                                     const Bindings& bindings) {
  return compile(program, catalog, bindings).point;
}

ParametricPoint hyperbolism(const ParametricPoint& base, const SurdFunc& c) {
  check_line_constant(base, c);
  if (base.x.is_zero()) throw Error(ErrorCode::kCurveOnAxis, "the curve lies on the y-axis (x0 = 0)");
  ParametricPoint out = with_exclusions(base.x, c * base.y / base.x, base);
  out.exclude(zero_locus(base.x));
  return out;
}

ParametricPoint antihyperbolism(const ParametricPoint& base, const SurdFunc& c) {
  check_line_constant(base, c);
  if (base.x.is_zero()) throw Error(ErrorCode::kCurveOnAxis, "the curve lies on the y-axis (x0 = 0)");
  return with_exclusions(base.x, base.x * base.y / c, base);
}

ParametricPoint hyperbolism(std::string_view curve, const Bindings& bindings, std::string_view line_x,
                            const Catalog& catalog) {
  return hyperbolism(catalog.get(curve, bindings).mover, line_constant(line_x, bindings));
}

ParametricPoint antihyperbolism(std::string_view curve, const Bindings& bindings, std::string_view line_x,
                                const Catalog& catalog) {
  return antihyperbolism(catalog.get(curve, bindings).mover, line_constant(line_x, bindings));
}

std::vector<double> excluded_real_values(const ParametricPoint& point) {
  std::vector<double> out;
  for (const auto& e : point.excluded) {
    for (const auto& v : e.variables()) {
      if (v != point.parameter) {
        throw Error(ErrorCode::kUnboundParameter, "parameter '" + v + "' must be bound to sample the point");
      }
    }
    for (const auto& r : isolate_real_roots(UPoly::from_multipoly(e, point.parameter), Rational(1, 1L << 40))) {
      out.push_back(r.midpoint().to_double());
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<TraceSample> trace_samples(const ParametricPoint& point, double lo, double hi, int n, double guard) {
  if (!(lo < hi)) throw Error(ErrorCode::kEmptyRange, "empty parameter range");
  if (n < 2) throw Error(ErrorCode::kInvalidArgument, "at least two samples are needed");
  const auto symbols = point.symbols();
  if (!symbols.empty()) {
    std::string names;
    for (const auto& s : symbols) names += (names.empty() ? "" : ", ") + s;
    throw Error(ErrorCode::kUnboundParameter, "bind " + names + " before sampling");
  }
  const std::vector<double> bad = excluded_real_values(point);
  std::vector<TraceSample> out;
  int segment = 0;
  bool gap = false;
  double last_u = lo;
  for (int i = 0; i < n; ++i) {
    const double u = lo + (hi - lo) * i / (n - 1);
    const bool near = std::any_of(bad.begin(), bad.end(), [&](double b) { return std::abs(u - b) < guard; });
    std::map<std::string, double, std::less<>> at{{point.parameter, u}};
    const double x = near ? NAN : point.x.evaluate_double(at);
    const double y = near ? NAN : point.y.evaluate_double(at);
    if (!std::isfinite(x) || !std::isfinite(y)) {
      gap = true;
      continue;
    }
    const bool crossed = !out.empty() && std::any_of(bad.begin(), bad.end(), [&](double b) { return last_u < b && b < u; });
    if (!out.empty() && (gap || crossed)) ++segment;
    gap = false;
    out.push_back({u, x, y, segment});
    last_u = u;
  }
  return out;
}

}  // namespace curvelab
