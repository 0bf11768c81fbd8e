#include "curvelab/analysis/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "curvelab/elim/resultant.hpp"
#include "curvelab/error.hpp"
#include "curvelab/io/expr.hpp"
#include "curvelab/poly/gcd.hpp"

namespace curvelab {

namespace {

const std::vector<std::string> kXY{"x", "y"};

const MultiPoly& X() {
  static const MultiPoly v = MultiPoly::variable("x");
  return v;
}
const MultiPoly& Y() {
  static const MultiPoly v = MultiPoly::variable("y");
  return v;
}

std::vector<std::string> parameters_of(const MultiPoly& p) {
  std::vector<std::string> out;
  for (const auto& v : p.variables()) {
    if (v != "x" && v != "y") out.push_back(v);
  }
  return out;
}

MultiPoly bind_fully(const MultiPoly& F, const Assignment& bindings, const char* what) {
  const MultiPoly G = F.substitute(bindings);
  const auto params = parameters_of(G);
  if (!params.empty()) {
    throw Error(ErrorCode::kUnboundParameter,
                std::string(what) + " needs every parameter bound; '" + params.front() + "' is free");
  }
  return G;
}

std::vector<PolyFactor> univariate_factors(const MultiPoly& p, std::string_view var) {
  std::vector<PolyFactor> out;
  for (const auto& f : factor_over_q(UPoly::from_multipoly(p, var)).factors) {
    out.push_back({normalize(f.factor.to_multipoly(var)), f.multiplicity});
  }
  return out;
}

// Factors of a polynomial primitive in {x, y}. Exact over Q without
// parameters; with parameters only the contents in x and in y are split off
// (factored further when they are parameter-free).
std::vector<PolyFactor> split_factors(const MultiPoly& G) {
  if (parameters_of(G).empty()) return factor_bivariate(G).factors;
  std::vector<PolyFactor> out;
  MultiPoly core = G;
  for (const char* var : {"y", "x"}) {
    if (!core.depends_on(var)) continue;
    const MultiPoly c = content_in(core, var);
    if (c.is_constant() || c.degree_in(kXY) < 1) continue;
    core = exact_quotient(core, c);
    const std::string other = var == std::string("y") ? "x" : "y";
    if (parameters_of(c).empty()) {
      for (auto& f : univariate_factors(c, other)) out.push_back(std::move(f));
    } else {
      out.push_back({normalize(c), 1});
    }
  }
  if (core.degree_in(kXY) >= 1) out.push_back({normalize(core), 1});
  return out;
}

double relative_residual(const MultiPoly& F, const std::map<std::string, double, std::less<>>& at) {
  double value = 0, scale = 0;
  for (const auto& t : F.terms()) {
    double m = t.coeff.to_double();
    for (const auto& [v, e] : F.powers(t)) m *= std::pow(at.at(v), e);
    value += m;
    scale += std::abs(m);
  }
  return std::abs(value) / std::max(scale, 1e-300);
}

std::vector<std::map<std::string, double, std::less<>>> sample_points(const ParametricPoint& point) {
  std::vector<std::map<std::string, double, std::less<>>> out;
  if (!point.symbols().empty()) return out;
  for (int i = 0; i <= 40; ++i) {
    const double u = -3.0 + 0.15 * i + 0.0137;
    std::map<std::string, double, std::less<>> at{{point.parameter, u}};
    const double x = point.x.evaluate_double(at), y = point.y.evaluate_double(at);
    if (std::isfinite(x) && std::isfinite(y)) out.push_back({{"x", x}, {"y", y}});
  }
  return out;
}

UPoly at_x(const MultiPoly& p, const Rational& x0) { return UPoly::from_multipoly(p.substitute("x", MultiPoly(x0)), "y"); }

// The polynomial in `keep` whose roots contain every coordinate of a
// common zero of G, Gx and Gy.
MultiPoly project(const MultiPoly& G, const MultiPoly& Gx, const MultiPoly& Gy, const std::string& eliminate) {
  auto one = [&](const MultiPoly& q) {
    if (q.is_zero()) return MultiPoly();
    if (!q.depends_on(eliminate)) return q;
    return sylvester_resultant(G, q, eliminate);
  };
  return poly_gcd(one(Gx), one(Gy));
}

Rational hessian_det(const MultiPoly& G, const Assignment& at, bool* quadratic_zero) {
  const Rational gxx = G.derivative("x").derivative("x").evaluate(at);
  const Rational gxy = G.derivative("x").derivative("y").evaluate(at);
  const Rational gyy = G.derivative("y").derivative("y").evaluate(at);
  *quadratic_zero = gxx.is_zero() && gxy.is_zero() && gyy.is_zero();
  return gxx * gyy - gxy * gxy;
}

// Third directional derivative along the double tangent line of a point
// whose Hessian is singular but nonzero; it vanishes unless the point is an
// ordinary cusp.
Rational cubic_along_tangent(const MultiPoly& G, const Assignment& at) {
  const MultiPoly Gxx = G.derivative("x").derivative("x"), Gxy = G.derivative("x").derivative("y");
  const MultiPoly Gyy = G.derivative("y").derivative("y");
  const Rational gxx = Gxx.evaluate(at), gxy = Gxy.evaluate(at);
  const Rational h = gxx.is_zero() ? Rational(1) : -gxy;
  const Rational k = gxx.is_zero() ? Rational(0) : gxx;
  return Gxx.derivative("x").evaluate(at) * h * h * h + Rational(3) * Gxx.derivative("y").evaluate(at) * h * h * k +
         Rational(3) * Gxy.derivative("y").evaluate(at) * h * k * k + Gyy.derivative("y").evaluate(at) * k * k * k;
}

SingularPoint classify(const MultiPoly& G, const Rational& x0, const Rational& y0) {
  SingularPoint sp{{x0, x0}, {y0, y0}, SingularKind::kUnresolved, ""};
  bool flat = false;
  const Rational det = hessian_det(G, {{"x", x0}, {"y", y0}}, &flat);
  if (flat) {
    sp.note = "multiplicity at least 3";
  } else if (det.sign() < 0) {
    sp.kind = SingularKind::kNode;
  } else if (det.is_zero()) {
    if (cubic_along_tangent(G, {{"x", x0}, {"y", y0}}).is_zero()) {
      sp.note = "tangent cone is a double line; tacnode or higher cusp";
    } else {
      sp.kind = SingularKind::kCusp;
      sp.note = "tangent cone is a double line";
    }
  } else {
    sp.note = "isolated real point";
  }
  return sp;
}

const Rational kFine(1, 1L << 40);

}  // namespace

ImplicitCurve strip_extraneous(const MultiPoly& F, const ParametricPoint& point) {
  if (F.is_zero()) throw Error(ErrorCode::kInvalidArgument, "cannot strip factors of the zero polynomial");
  ImplicitCurve out;
  out.provenance.path = "direct";
  const ContentPrimitive cp = content_primitive(F, kXY);
  if (!cp.content.is_constant()) {
    out.provenance.removed.push_back({normalize(cp.content), "content in the parameters only"});
  }
  const auto samples = sample_points(point);
  MultiPoly kept(1);
  bool any = false;
  for (const auto& f : split_factors(cp.primitive)) {
    bool on_curve = verify_on_curve(f.factor, point);
    if (!on_curve && !samples.empty()) {
      const auto hits = std::count_if(samples.begin(), samples.end(),
                                      [&](const auto& at) { return relative_residual(f.factor, at) < 1e-8; });
      on_curve = 2 * static_cast<std::size_t>(hits) > samples.size();
      if (on_curve) out.provenance.notes.push_back("kept " + f.factor.to_string() + " on sample evidence");
    }
    if (on_curve) {
      kept *= f.factor;
      any = true;
    } else {
      out.provenance.removed.push_back(
          {f.factor, "extraneous component: not on the traced locus (added by the Zariski closure)"});
    }
  }
  if (!any) {
    throw Error(ErrorCode::kNoFactorMatches, "no factor of " + F.to_string() + " vanishes on the point");
  }
  out.defining = normalize(kept);
  out.total_degree = out.defining.total_degree();
  out.degree_xy = out.defining.degree_in(kXY);
  out.degree_x = std::max(out.defining.degree("x"), 0);
  out.degree_y = std::max(out.defining.degree("y"), 0);
  return out;
}

const char* singular_kind_name(SingularKind k) {
  switch (k) {
    case SingularKind::kNode: return "node";
    case SingularKind::kCusp: return "cusp";
    case SingularKind::kUnresolved: return "unresolved";
  }
  return "?";
}

SingularReport singular_points(const MultiPoly& F, const Assignment& bindings) {
  SingularReport report;
  const MultiPoly bound = bind_fully(F, bindings, "singular_points");
  if (bound.is_constant()) return report;
  const MultiPoly G = normalize(bound);
  const MultiPoly Gx = G.derivative("x"), Gy = G.derivative("y");
  if (!poly_gcd(poly_gcd(G, Gx), Gy).is_constant()) {
    throw Error(ErrorCode::kPositiveDimensional, "the curve has a repeated component; its singular locus is a curve");
  }
  if (!G.depends_on("x") || !G.depends_on("y")) return report;

  const MultiPoly hx = project(G, Gx, Gy, "y");
  if (hx.is_zero()) throw Error(ErrorCode::kPositiveDimensional, "singular locus is not finite");
  if (hx.is_constant()) return report;

  const UPoly hu = squarefree_part(UPoly::from_multipoly(hx, "x"));
  const std::vector<Rational> xs = rational_roots(hu);
  UPoly rest = hu;
  for (const auto& r : xs) rest = divmod(rest, UPoly(std::vector<Rational>{-r, 1})).first;

  for (const auto& x0 : xs) {
    const UPoly g = at_x(G, x0), gx = at_x(Gx, x0), gy = at_x(Gy, x0);
    const UPoly crit = gcd(gx, gy);
    if (crit.is_zero()) {
      report.notes.push_back("F_x = F_y = 0 along the whole line x = " + x0.to_string() + ", which the curve " +
                             (g.is_zero() ? "contains" : "does not meet there"));
      if (g.is_zero()) continue;
      for (const auto& y0 : rational_roots(g)) report.points.push_back(classify(G, x0, y0));
      continue;
    }
    const UPoly common = squarefree_part(gcd(g, crit));
    for (const auto& y0 : rational_roots(crit)) {
      if (!g.evaluate(y0).is_zero()) report.off_curve_critical.push_back({x0, y0});
    }
    if (common.degree() < 1) continue;
    const std::vector<Rational> ys = rational_roots(common);
    for (const auto& y0 : ys) report.points.push_back(classify(G, x0, y0));
    UPoly irr = common;
    for (const auto& r : ys) irr = divmod(irr, UPoly(std::vector<Rational>{-r, 1})).first;
    if (irr.degree() >= 1) {
      for (const auto& iv : isolate_real_roots(irr, kFine)) {
        report.points.push_back({{x0, x0}, iv, SingularKind::kUnresolved, "irrational y coordinate"});
      }
    }
  }

  if (rest.degree() >= 1) {
    const auto x_roots = isolate_real_roots(rest, kFine);
    if (!x_roots.empty()) {
      const MultiPoly hy = project(G, Gx, Gy, "x");
      const auto y_roots = hy.is_constant() || hy.is_zero()
                               ? std::vector<RootInterval>{}
                               : isolate_real_roots(squarefree_part(UPoly::from_multipoly(hy, "y")), kFine);
      for (const auto& xi : x_roots) {
        for (const auto& yi : y_roots) {
          const std::map<std::string, double, std::less<>> at{{"x", xi.midpoint().to_double()},
                                                              {"y", yi.midpoint().to_double()}};
          if (relative_residual(G, at) < 1e-6 && relative_residual(Gx, at) < 1e-6 &&
              relative_residual(Gy, at) < 1e-6) {
            report.points.push_back({xi, yi, SingularKind::kUnresolved, "irrational point, coordinates paired numerically"});
          }
        }
      }
    }
  }
  std::sort(report.points.begin(), report.points.end(), [](const SingularPoint& a, const SingularPoint& b) {
    if (a.x.lo != b.x.lo) return a.x.lo < b.x.lo;
    return a.y.lo < b.y.lo;
  });
  return report;
}

SymmetryFlags symmetry_flags(const MultiPoly& F) {
  SymmetryFlags s;
  const MultiPoly mx = F.substitute("x", -X());
  const MultiPoly my = F.substitute("y", -Y());
  s.x_axis = are_associates(my, F);
  s.y_axis = are_associates(mx, F);
  s.origin = are_associates(mx.substitute("y", -Y()), F);
  return s;
}

VerticalAsymptotes vertical_asymptotes(const MultiPoly& F) {
  if (F.degree("y") < 1) throw Error(ErrorCode::kInvalidArgument, "vertical asymptotes need a polynomial in y");
  VerticalAsymptotes out;
  out.leading = F.coefficients_in("y").back();
  out.residual = MultiPoly(1);
  if (!out.leading.depends_on("x")) return out;
  if (!parameters_of(out.leading).empty()) {
    MultiPoly rest = out.leading;
    int k = 0;
    while (auto q = divide_exact(rest, X())) {
      rest = std::move(*q);
      ++k;
    }
    if (k > 0) out.rational_roots.push_back({Rational(0), k});
    if (rest.depends_on("x")) out.residual = squarefree_part(rest);
    return out;
  }
  UPoly residual(Rational(1));
  for (const auto& f : factor_over_q(UPoly::from_multipoly(out.leading, "x")).factors) {
    if (f.factor.degree() == 1) {
      out.rational_roots.push_back({-f.factor.coeff(0) / f.factor.coeff(1), f.multiplicity});
    } else {
      residual = residual * f.factor;
    }
  }
  std::sort(out.rational_roots.begin(), out.rational_roots.end());
  if (residual.degree() >= 1) {
    out.residual = normalize(residual.to_multipoly("x"));
    out.irrational_roots = isolate_real_roots(residual);
  }
  return out;
}

const char* conic_kind_name(ConicKind k) {
  switch (k) {
    case ConicKind::kEllipse: return "ellipse";
    case ConicKind::kParabola: return "parabola";
    case ConicKind::kHyperbola: return "hyperbola";
    case ConicKind::kDegenerate: return "degenerate";
  }
  return "?";
}

ConicReport identify_conic(const MultiPoly& F, const Assignment& bindings) {
  const MultiPoly G = bind_fully(F, bindings, "identify_conic");
  if (G.degree_in(kXY) != 2) {
    throw Error(ErrorCode::kInvalidArgument, "not a conic: total degree " + std::to_string(G.degree_in(kXY)));
  }
  Rational A, B, C, D, E, K;
  for (const auto& t : G.terms()) {
    const unsigned i = G.exponent(t, "x"), j = G.exponent(t, "y");
    Rational* slot = i == 2 ? &A : j == 2 ? &C : (i == 1 && j == 1) ? &B : i == 1 ? &D : j == 1 ? &E : &K;
    *slot = t.coeff;
  }
  const Rational two(2);
  ConicReport r;
  r.discriminant = B * B - Rational(4) * A * C;
  // Determinant of the symmetric 3x3 matrix of the conic.
  const Rational b = B / two, d = D / two, e = E / two;
  const Rational det3 = A * (C * K - e * e) - b * (b * K - e * d) + d * (b * e - C * d);
  if (!r.discriminant.is_zero()) {
    const Rational den = Rational(4) * A * C - B * B;
    r.center = std::array<Rational, 2>{(B * E - two * C * D) / den, (B * D - two * A * E) / den};
  }
  if (det3.is_zero()) {
    r.kind = ConicKind::kDegenerate;
    r.note = "the conic splits into lines or a point";
    return r;
  }
  if (r.discriminant.sign() < 0) {
    if (((A + C) * det3).sign() > 0) {
      r.kind = ConicKind::kDegenerate;
      r.note = "imaginary ellipse with no real points";
      return r;
    }
    r.kind = ConicKind::kEllipse;
  } else if (r.discriminant.is_zero()) {
    r.kind = ConicKind::kParabola;
  } else {
    r.kind = ConicKind::kHyperbola;
  }
  if (r.center && B.is_zero()) {
    const Rational k = G.evaluate({{"x", (*r.center)[0]}, {"y", (*r.center)[1]}});
    r.semi_axes_squared = std::array<Rational, 2>{-k / A, -k / C};
  } else if (r.center) {
    r.note = "axes are rotated; semi-axes are not reported";
  }
  return r;
}

ConicFit conic_through_5_points(const std::vector<std::array<Rational, 2>>& points) {
  if (points.size() != 5) throw Error(ErrorCode::kInvalidArgument, "a conic is fitted through exactly 5 points");
  for (std::size_t i = 0; i < 5; ++i) {
    for (std::size_t j = i + 1; j < 5; ++j) {
      if (points[i] == points[j]) throw Error(ErrorCode::kInvalidArgument, "the 5 points must be distinct");
    }
  }
  std::vector<std::vector<Rational>> m;
  for (const auto& [x, y] : points) m.push_back({x * x, x * y, y * y, x, y, Rational(1)});
  std::vector<int> pivot_col;
  int row = 0;
  for (int col = 0; col < 6 && row < 5; ++col) {
    int p = row;
    while (p < 5 && m[p][col].is_zero()) ++p;
    if (p == 5) continue;
    std::swap(m[p], m[row]);
    const Rational inv = Rational(1) / m[row][col];
    for (auto& v : m[row]) v *= inv;
    for (int r = 0; r < 5; ++r) {
      if (r == row || m[r][col].is_zero()) continue;
      const Rational f = m[r][col];
      for (int c = 0; c < 6; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_col.push_back(col);
    ++row;
  }
  ConicFit fit;
  fit.rank = row;
  if (row < 5) return fit;
  int free_col = 0;
  while (std::find(pivot_col.begin(), pivot_col.end(), free_col) != pivot_col.end()) ++free_col;
  std::array<Rational, 6> coef{};
  coef[static_cast<std::size_t>(free_col)] = Rational(1);
  for (int r = 0; r < 5; ++r) coef[static_cast<std::size_t>(pivot_col[r])] = -m[r][free_col];
  const MultiPoly monomials[6] = {X() * X(), X() * Y(), Y() * Y(), X(), Y(), MultiPoly(1)};
  MultiPoly conic;
  for (int i = 0; i < 6; ++i) conic += monomials[i] * coef[static_cast<std::size_t>(i)];
  fit.conic = normalize(conic);
  return fit;
}

InflectionCandidates inflection_candidates(const ParametricPoint& point) {
  const auto symbols = point.symbols();
  if (!symbols.empty()) {
    throw Error(ErrorCode::kUnboundParameter, "bind '" + symbols.front() + "' before locating inflections");
  }
  const std::string& u = point.parameter;
  const SurdFunc x1 = point.x.derivative(u), y1 = point.y.derivative(u);
  const SurdFunc k = x1 * y1.derivative(u) - y1 * x1.derivative(u);
  InflectionCandidates out;
  if (k.is_zero()) {
    out.all_parameters = true;
    return out;
  }
  out.numerator = k.is_rational() ? k.rational_part().numer() : k.norm().numer();
  if (!out.numerator.depends_on(u)) return out;
  UPoly num = squarefree_part(UPoly::from_multipoly(out.numerator, u));
  for (const auto& e : point.excluded) {
    if (!e.depends_on(u)) continue;
    const UPoly g = gcd(num, UPoly::from_multipoly(e, u));
    if (g.degree() > 0) num = divmod(num, g).first;
  }
  const auto exact = rational_roots(num);
  for (const auto& r : exact) {
    num = divmod(num, UPoly(std::vector<Rational>{-r, 1})).first;
    out.values.push_back({r, r});
  }
  if (num.degree() >= 1) {
    for (const auto& iv : isolate_real_roots(num, kFine)) out.values.push_back(iv);
  }
  std::sort(out.values.begin(), out.values.end(),
            [](const RootInterval& a, const RootInterval& b) { return a.midpoint() < b.midpoint(); });
  return out;
}

AnalysisReport analyze(const MultiPoly& F, const AnalysisOptions& options) {
  if (F.is_zero()) throw Error(ErrorCode::kInvalidArgument, "cannot analyze the zero polynomial");
  AnalysisReport r;
  r.input = F;
  r.bound = F.substitute(options.bindings);
  if (r.bound.degree_in(kXY) < 1) throw Error(ErrorCode::kInvalidArgument, "polynomial has degree 0 in x and y");
  const bool numeric = parameters_of(r.bound).empty();

  r.irreducibility = irreducible_over_rationals(r.bound, options.irreducibility);
  const ContentPrimitive cp = content_primitive(r.bound, kXY);
  if (!cp.content.is_constant()) r.notes.push_back("content in the parameters: " + cp.content.to_string());
  const auto factors = r.irreducibility.exact ? r.irreducibility.witness : split_factors(cp.primitive);

  std::optional<ParametricPoint> point;
  if (options.point) point = options.point->bind(options.bindings);
  MultiPoly curve(1);
  for (const auto& f : factors) {
    AnalyzedFactor af{f, false, "", std::nullopt};
    if (point) {
      if (!verify_on_curve(f.factor, *point)) {
        af.extraneous = true;
        af.reason = "does not vanish on the construction";
      }
    } else if (factors.size() > 1 && (f.factor == X() || f.factor == Y())) {
      af.extraneous = true;
      af.reason = f.factor == X() ? "the y-axis x = 0; typically introduced by clearing the denominator x"
                                  : "the x-axis y = 0; typically introduced by clearing the denominator y";
    }
    if (numeric && f.factor.degree_in(kXY) == 2) af.conic = identify_conic(f.factor);
    if (!af.extraneous) curve *= f.factor;
    r.factors.push_back(std::move(af));
  }
  if (factors.size() > 1 && !r.irreducibility.exact) {
    r.notes.push_back("with symbolic parameters only the contents in x and in y are split off");
  }

  r.symmetry = symmetry_flags(r.bound);
  if (r.bound.degree("y") >= 1) r.asymptotes = vertical_asymptotes(r.bound);
  if (numeric) {
    try {
      r.singular = singular_points(r.bound);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kPositiveDimensional) throw;
      r.notes.push_back(e.what());
    }
    if (curve.degree_in(kXY) == 2) r.conic = identify_conic(curve);
  } else {
    r.notes.push_back("bind every parameter to compute singular points and conic type");
  }
  return r;
}

nlohmann::json to_json(const RootInterval& r) {
  if (r.exact()) return {{"value", r.lo.to_string()}, {"approx", r.lo.to_double()}};
  return {{"lo", r.lo.to_string()}, {"hi", r.hi.to_string()}, {"approx", r.midpoint().to_double()}};
}

nlohmann::json to_json(const SingularReport& r) {
  nlohmann::json points = nlohmann::json::array();
  for (const auto& p : r.points) {
    nlohmann::json j{{"x", to_json(p.x)}, {"y", to_json(p.y)}, {"kind", singular_kind_name(p.kind)}};
    if (!p.note.empty()) j["note"] = p.note;
    points.push_back(std::move(j));
  }
  nlohmann::json off = nlohmann::json::array();
  for (const auto& [x, y] : r.off_curve_critical) off.push_back({x.to_string(), y.to_string()});
  return {{"points", points}, {"off_curve_critical", off}, {"notes", r.notes}};
}

nlohmann::json to_json(const ConicReport& r) {
  nlohmann::json j{{"kind", conic_kind_name(r.kind)}, {"discriminant", r.discriminant.to_string()}};
  if (r.center) j["center"] = {(*r.center)[0].to_string(), (*r.center)[1].to_string()};
  if (r.semi_axes_squared) {
    j["semi_axes_squared"] = {(*r.semi_axes_squared)[0].to_string(), (*r.semi_axes_squared)[1].to_string()};
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

nlohmann::json to_json(const AnalysisReport& r) {
  nlohmann::json factors = nlohmann::json::array();
  for (const auto& f : r.factors) {
    nlohmann::json j{{"factor", f.factor.factor.to_string()},
                     {"multiplicity", f.factor.multiplicity},
                     {"extraneous", f.extraneous}};
    if (!f.reason.empty()) j["reason"] = f.reason;
    if (f.conic) j["conic"] = to_json(*f.conic);
    factors.push_back(std::move(j));
  }
  nlohmann::json irr{{"verdict", irreducibility_name(r.irreducibility.verdict)},
                     {"exact", r.irreducibility.exact},
                     {"trials", r.irreducibility.trials},
                     {"summary", r.irreducibility.summary()}};
  if (!r.irreducibility.witness_point.empty()) {
    nlohmann::json at = nlohmann::json::object();
    for (const auto& [k, v] : r.irreducibility.witness_point) at[k] = v.to_string();
    irr["witness_point"] = at;
  }
  nlohmann::json j{{"input", canonical_text(r.input)},
                   {"bound", canonical_text(r.bound)},
                   {"factors", factors},
                   {"irreducibility", irr},
                   {"symmetry", {{"x_axis", r.symmetry.x_axis}, {"y_axis", r.symmetry.y_axis}, {"origin", r.symmetry.origin}}},
                   {"singular_points", r.singular ? to_json(*r.singular) : nlohmann::json(nullptr)},
                   {"conic", r.conic ? to_json(*r.conic) : nlohmann::json(nullptr)},
                   {"notes", r.notes}};
  if (r.asymptotes) {
    nlohmann::json roots = nlohmann::json::array();
    for (const auto& [x, m] : r.asymptotes->rational_roots) roots.push_back({{"x", x.to_string()}, {"multiplicity", m}});
    nlohmann::json irr_roots = nlohmann::json::array();
    for (const auto& iv : r.asymptotes->irrational_roots) irr_roots.push_back(to_json(iv));
    j["asymptotes"] = {{"leading", r.asymptotes->leading.to_string()},
                       {"rational_roots", roots},
                       {"residual", r.asymptotes->residual.to_string()},
                       {"irrational_roots", irr_roots}};
  } else {
    j["asymptotes"] = nullptr;
  }
  return j;
}

}  // namespace curvelab
