#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "curvelab/analysis/analysis.hpp"
#include "curvelab/catalog/catalog.hpp"
#include "curvelab/error.hpp"
#include "curvelab/io/expr.hpp"
#include "curvelab/locus/locus.hpp"
#include "curvelab/poly/gcd.hpp"

namespace curvelab {
namespace {

MultiPoly P(std::string_view s) { return parse_poly(s); }

std::vector<std::string> factor_texts(const FactorizationResult& r) {
  std::vector<std::string> out;
  for (const auto& f : r.factors) {
    out.push_back(f.factor.to_string() + (f.multiplicity > 1 ? "^" + std::to_string(f.multiplicity) : ""));
  }
  return out;
}

void expect_reconstructs(const MultiPoly& F, const FactorizationResult& r) {
  EXPECT_EQ(r.product(), F);
  for (const auto& f : r.factors) EXPECT_TRUE(divide_exact(F, f.factor).has_value()) << f.factor.to_string();
}

TEST(FactorBivariate, ExtraneousAxisFactor) {
  const MultiPoly F = P("x*(9*x^2 - 54*x + 4*y^2)");
  const auto r = factor_bivariate(F);
  EXPECT_EQ(factor_texts(r), (std::vector<std::string>{"x", "9*x^2 + 4*y^2 - 54*x"}));
  expect_reconstructs(F, r);
}

TEST(FactorBivariate, DifferenceOfSquares) {
  const auto r = factor_bivariate(P("x^2 - y^2"));
  EXPECT_EQ(factor_texts(r), (std::vector<std::string>{"x + y", "x - y"}));
}

TEST(FactorBivariate, KulpInstanceIsIrreducible) {
  const auto r = factor_bivariate(P("x^2*y^2 + 16*x^2 - 256"));
  ASSERT_EQ(r.factors.size(), 1u);
  EXPECT_EQ(r.count(), 1);
}

TEST(FactorBivariate, MultiplicitiesContentAndUnit) {
  const MultiPoly F = P("-3/2*(x - y)^2*(x + y + 1)*(y^2 - 2)^3*x");
  const auto r = factor_bivariate(F);
  expect_reconstructs(F, r);
  EXPECT_EQ(r.count(), 7);
  EXPECT_EQ(r.unit, Rational(-3, 2));
}

TEST(FactorBivariate, FactorsThatMeetInManyPoints) {
  // Both factors share the image y = 0 specialization structure.
  const MultiPoly F = P("(x^2 + y^2 - 1)*(x^2*y^2 + 16*x^2 - 256)*(y - x^3)*(x^2 - 2*y^2 - 3)");
  const auto r = factor_bivariate(F);
  EXPECT_EQ(r.factors.size(), 4u);
  expect_reconstructs(F, r);
}

TEST(FactorBivariate, RejectsParameters) {
  EXPECT_THROW(factor_bivariate(P("x^2 - a*y")), Error);
  EXPECT_THROW(factor_bivariate(MultiPoly()), Error);
}

TEST(FactorBivariate, RandomProductsReconstruct) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> coef(-4, 4), deg(1, 3);
  for (int trial = 0; trial < 12; ++trial) {
    MultiPoly F(1);
    int pieces = 0;
    for (int k = 0; k < 3; ++k) {
      MultiPoly f;
      const int d = deg(rng);
      for (int i = 0; i <= d; ++i) {
        for (int j = 0; i + j <= d; ++j) {
          f += MultiPoly::monomial(Rational(coef(rng)), {{"x", i}, {"y", j}});
        }
      }
      if (f.degree_in({"x", "y"}) < 1) continue;
      F *= f;
      ++pieces;
    }
    if (F.is_constant()) continue;
    const auto r = factor_bivariate(F);
    expect_reconstructs(F, r);
    EXPECT_GE(r.count(), pieces);
    for (const auto& f : r.factors) {
      // Each reported factor is itself irreducible.
      EXPECT_EQ(factor_bivariate(f.factor).count(), 1) << f.factor.to_string();
    }
  }
}

TEST(Irreducibility, KulpGeneralIsProbablyIrreducible) {
  const auto v = irreducible_over_rationals(P("r^2*x^2 + x^2*y^2 - r^4"), {5, kDefaultAnalysisSeed});
  EXPECT_EQ(v.verdict, Irreducibility::kIrreducible);
  EXPECT_FALSE(v.exact);
  EXPECT_EQ(v.trials, 5);
  EXPECT_EQ(v.summary(), "irreducible (probabilistic, trials=5)");
}

TEST(Irreducibility, ReducibleWitnessMultipliesBack) {
  const MultiPoly F = P("(x + y)*(x - y + a)");
  const auto v = irreducible_over_rationals(F, {3, 1});
  ASSERT_EQ(v.verdict, Irreducibility::kReducibleAtSpecialization);
  MultiPoly prod(1);
  for (const auto& f : v.witness) prod *= f.factor.pow(static_cast<unsigned>(f.multiplicity));
  EXPECT_TRUE(are_associates(prod, F.substitute(v.witness_point)));
  EXPECT_EQ(v.witness.size(), 2u);
}

TEST(Irreducibility, ExactWithoutParametersAndContentIgnored) {
  const auto v = irreducible_over_rationals(P("x*(9*x^2 - 54*x + 4*y^2)"));
  EXPECT_EQ(v.verdict, Irreducibility::kReducible);
  EXPECT_TRUE(v.exact);
  const auto w = irreducible_over_rationals(P("a^2*(x^2 + y^2 - a^2)"), {3, 2});
  EXPECT_EQ(w.verdict, Irreducibility::kIrreducible);
  EXPECT_EQ(w.parameter_content, P("a^2"));
}

TEST(Irreducibility, LinearAndConstant) {
  EXPECT_EQ(irreducible_over_rationals(P("x")).verdict, Irreducibility::kIrreducible);
  EXPECT_THROW(irreducible_over_rationals(P("a^2 + 1")), Error);
  EXPECT_EQ(irreducible_over_rationals(P("x^2 + y")).verdict, Irreducibility::kIrreducible);
}

TEST(Irreducibility, NephroidHyperbolismDegree12) {
  const ImplicitCurve G = implicitize(hyperbolism("nephroid", {}, "b"));
  ASSERT_EQ(G.total_degree, 12);
  const auto v = irreducible_over_rationals(G.defining, {3, kDefaultAnalysisSeed});
  EXPECT_EQ(v.verdict, Irreducibility::kIrreducible);
  EXPECT_EQ(v.trials, 3);
}

ParametricPoint piriform_hyperbolism(std::string_view bindings) {
  return hyperbolism("piriform_upper", parse_bindings(bindings), "a");
}

TEST(StripExtraneous, DropsTheAxis) {
  const ImplicitCurve c = strip_extraneous(P("x*(9*x^2 - 54*x + 4*y^2)"), piriform_hyperbolism("a=6, b=4"));
  EXPECT_EQ(c.defining, P("9*x^2 - 54*x + 4*y^2"));
  ASSERT_EQ(c.provenance.removed.size(), 1u);
  EXPECT_EQ(c.provenance.removed[0].factor, P("x"));
}

TEST(StripExtraneous, ParameterContentAndSymbolicAxis) {
  const ParametricPoint pt = piriform_hyperbolism("");
  const ImplicitCurve c = strip_extraneous(P("b^2*x*(a^2*x^2 - a^3*x + b^2*y^2)"), pt);
  EXPECT_EQ(c.defining, P("a^2*x^2 - a^3*x + b^2*y^2"));
  EXPECT_EQ(c.provenance.removed.size(), 2u);
  const ImplicitCurve same = strip_extraneous(P("a^2*x^2 - a^3*x + b^2*y^2"), pt);
  EXPECT_TRUE(same.provenance.removed.empty());
  EXPECT_THROW(strip_extraneous(P("x*y"), pt), Error);
}

// F(x0 + h, y0 + k) expanded in h and k: value, gradient and Hessian read
// off the coefficients.
struct Taylor {
  Rational value, fh, fk, fhh, fhk, fkk;
};

Taylor taylor(const MultiPoly& F, const Rational& x0, const Rational& y0) {
  const MultiPoly T = F.substitute({{"x", MultiPoly(x0) + MultiPoly::variable("h")},
                                    {"y", MultiPoly(y0) + MultiPoly::variable("k")}});
  Taylor t;
  for (const auto& term : T.terms()) {
    const auto p = T.powers(term);
    const unsigned i = p.count("h") ? p.at("h") : 0, j = p.count("k") ? p.at("k") : 0;
    if (i == 0 && j == 0) t.value = term.coeff;
    if (i == 1 && j == 0) t.fh = term.coeff;
    if (i == 0 && j == 1) t.fk = term.coeff;
    if (i == 2 && j == 0) t.fhh = term.coeff;
    if (i == 1 && j == 1) t.fhk = term.coeff;
    if (i == 0 && j == 2) t.fkk = term.coeff;
  }
  return t;
}

TEST(SingularPoints, EllipseHyperbolismHasNone) {
  const SingularReport r = singular_points(P("b^2*x^2 + x^2*y^2 - a^2*b^2"), {{"a", 2}, {"b", 1}});
  EXPECT_TRUE(r.points.empty());
  EXPECT_FALSE(r.notes.empty());  // F_x = F_y = 0 on x = 0, off the curve
}

TEST(SingularPoints, GeronoNodeMatchesTaylorOracle) {
  const MultiPoly F = P("x^4 - a^2*x^2 + b^2*y^2");
  const SingularReport r = singular_points(F, {{"a", 1}, {"b", 1}});
  ASSERT_EQ(r.points.size(), 1u);
  EXPECT_TRUE(r.points[0].x.exact() && r.points[0].y.exact());
  EXPECT_EQ(r.points[0].x.lo, Rational(0));
  EXPECT_EQ(r.points[0].y.lo, Rational(0));
  EXPECT_EQ(r.points[0].kind, SingularKind::kNode);
  const Taylor t = taylor(F.substitute(Assignment{{"a", 1}, {"b", 1}}), 0, 0);
  EXPECT_TRUE(t.value.is_zero() && t.fh.is_zero() && t.fk.is_zero());
  // Quadratic part fhh h^2 + fhk hk + fkk k^2 splits into two real lines.
  EXPECT_GT((t.fhk * t.fhk - Rational(4) * t.fhh * t.fkk).sign(), 0);
}

TEST(SingularPoints, CuspAndShiftedNode) {
  const SingularReport cusp = singular_points(P("y^2 - x^3"));
  ASSERT_EQ(cusp.points.size(), 1u);
  EXPECT_EQ(cusp.points[0].kind, SingularKind::kCusp);

  // Gerono moved to (1/2, -3): the node moves with it.
  const MultiPoly moved = P("(x - 1/2)^4 - 4*(x - 1/2)^2 + (y + 3)^2");
  const SingularReport r = singular_points(moved);
  ASSERT_EQ(r.points.size(), 1u);
  EXPECT_EQ(r.points[0].x.lo, Rational(1, 2));
  EXPECT_EQ(r.points[0].y.lo, Rational(-3));
  EXPECT_EQ(r.points[0].kind, SingularKind::kNode);
  const Taylor t = taylor(moved, Rational(1, 2), -3);
  EXPECT_TRUE(t.value.is_zero() && t.fh.is_zero() && t.fk.is_zero());
}

TEST(SingularPoints, IrrationalAndIsolated) {
  // Node at (sqrt 2, 0).
  const SingularReport r = singular_points(P("(x^2 - 2)^2 - y^2"));
  ASSERT_EQ(r.points.size(), 2u);
  for (const auto& p : r.points) {
    EXPECT_FALSE(p.x.exact());
    EXPECT_NEAR(std::abs(p.x.midpoint().to_double()), std::sqrt(2.0), 1e-9);
    EXPECT_EQ(p.kind, SingularKind::kUnresolved);
  }
  const SingularReport iso = singular_points(P("x^2 + y^2 + x^3"));
  ASSERT_EQ(iso.points.size(), 1u);
  EXPECT_EQ(iso.points[0].kind, SingularKind::kUnresolved);
}

TEST(SingularPoints, CurveContainingTheLineIsReportedOnce) {
  // The y-axis meets the ellipse tangentially at the origin only.
  const SingularReport r = singular_points(P("x*(9*x^2 - 54*x + 4*y^2)"));
  ASSERT_EQ(r.points.size(), 1u);
  EXPECT_TRUE(r.points[0].x.exact() && r.points[0].y.exact());
  EXPECT_EQ(r.points[0].y.lo, Rational(0));
  // Two smooth branches with a common tangent: not an ordinary cusp.
  EXPECT_EQ(r.points[0].kind, SingularKind::kUnresolved);

  const SingularReport tacnode = singular_points(P("y^2 - x^4"));
  ASSERT_EQ(tacnode.points.size(), 1u);
  EXPECT_EQ(tacnode.points[0].kind, SingularKind::kUnresolved);
  const SingularReport tilted = singular_points(P("(x - y)^2 - x^3"));
  ASSERT_EQ(tilted.points.size(), 1u);
  EXPECT_EQ(tilted.points[0].kind, SingularKind::kCusp);
}

TEST(SingularPoints, Errors) {
  EXPECT_THROW(singular_points(P("(x - y)^2*(x + 1)")), Error);
  EXPECT_THROW(singular_points(P("x^2 - a*y")), Error);
  EXPECT_TRUE(singular_points(P("x^2 + y^2 - 1")).points.empty());
}

TEST(Symmetry, Flags) {
  const SymmetryFlags k = symmetry_flags(P("r^2*x^2 + x^2*y^2 - r^4"));
  EXPECT_TRUE(k.x_axis && k.y_axis && k.origin);
  const SymmetryFlags c = symmetry_flags(P("x*y^2 + b^2*x - a*b^2"));
  EXPECT_TRUE(c.x_axis);
  EXPECT_FALSE(c.y_axis);
  EXPECT_FALSE(c.origin);
  EXPECT_TRUE(symmetry_flags(P("x")).y_axis);
}

TEST(VerticalAsymptotes, LeadingCoefficientRoots) {
  const auto k = vertical_asymptotes(P("x^2*y^2 + 16*x^2 - 256"));
  ASSERT_EQ(k.rational_roots.size(), 1u);
  EXPECT_EQ(k.rational_roots[0], (std::pair<Rational, int>{0, 2}));
  const auto c = vertical_asymptotes(P("x*y^2 + 4*x - 8"));
  ASSERT_EQ(c.rational_roots.size(), 1u);
  EXPECT_EQ(c.rational_roots[0].first, Rational(0));
  const auto symbolic = vertical_asymptotes(P("x*y^2 + b^2*x - a*b^2"));
  ASSERT_EQ(symbolic.rational_roots.size(), 1u);
  EXPECT_TRUE(vertical_asymptotes(P("y - x^2")).rational_roots.empty());
  const auto irr = vertical_asymptotes(P("(x^2 - 2)*(x - 1)*y + 1"));
  EXPECT_EQ(irr.rational_roots.size(), 1u);
  EXPECT_EQ(irr.irrational_roots.size(), 2u);
  EXPECT_THROW(vertical_asymptotes(P("x^2 - 1")), Error);
}

TEST(IdentifyConic, Ellipses) {
  const ConicReport e = identify_conic(P("a^2*x^2 - a^3*x + b^2*y^2"), {{"a", 2}, {"b", 1}});
  EXPECT_EQ(e.kind, ConicKind::kEllipse);
  ASSERT_TRUE(e.center && e.semi_axes_squared);
  EXPECT_EQ(*e.center, (std::array<Rational, 2>{1, 0}));
  EXPECT_EQ(*e.semi_axes_squared, (std::array<Rational, 2>{1, 4}));

  const ConicReport g = identify_conic(P("9*x^2 - 54*x + 4*y^2"));
  EXPECT_EQ(g.kind, ConicKind::kEllipse);
  EXPECT_EQ(*g.center, (std::array<Rational, 2>{3, 0}));
  EXPECT_EQ(*g.semi_axes_squared, (std::array<Rational, 2>{9, Rational(81, 4)}));
}

TEST(IdentifyConic, OtherKinds) {
  EXPECT_EQ(identify_conic(P("x*y - 1")).kind, ConicKind::kHyperbola);
  EXPECT_EQ(identify_conic(P("y - x^2")).kind, ConicKind::kParabola);
  EXPECT_EQ(identify_conic(P("x^2 - y^2")).kind, ConicKind::kDegenerate);
  EXPECT_EQ(identify_conic(P("x^2 + y^2 + 1")).kind, ConicKind::kDegenerate);
  const ConicReport rotated = identify_conic(P("x^2 + x*y + y^2 - 1"));
  EXPECT_EQ(rotated.kind, ConicKind::kEllipse);
  EXPECT_FALSE(rotated.semi_axes_squared.has_value());
  EXPECT_THROW(identify_conic(P("x^3 - y")), Error);
  EXPECT_THROW(identify_conic(P("x^2 - a")), Error);
}

TEST(ConicFit, ReproducesTheEllipse) {
  // (x - 3)^2/9 + y^2/(81/4) = 1 sampled through its rational parametrization.
  std::vector<std::array<Rational, 2>> pts;
  for (int t : {0, 1, 2, -1, 3}) {
    const Rational T(t), d = Rational(1) + T * T;
    pts.push_back({Rational(3) + Rational(3) * (Rational(1) - T * T) / d, Rational(9) * T / d});
  }
  const ConicFit fit = conic_through_5_points(pts);
  ASSERT_TRUE(fit.conic);
  EXPECT_EQ(fit.rank, 5);
  EXPECT_TRUE(are_associates(*fit.conic, P("9*x^2 - 54*x + 4*y^2")));
}

TEST(ConicFit, ParabolaAndCollinear) {
  std::vector<std::array<Rational, 2>> parabola, line;
  for (int i = -2; i <= 2; ++i) {
    parabola.push_back({Rational(i), Rational(i * i)});
    line.push_back({Rational(i), Rational(2 * i + 1)});
  }
  EXPECT_TRUE(are_associates(*conic_through_5_points(parabola).conic, P("y - x^2")));
  const ConicFit l = conic_through_5_points(line);
  EXPECT_FALSE(l.conic.has_value());
  EXPECT_LT(l.rank, 5);
  EXPECT_THROW(conic_through_5_points({{0, 0}}), Error);
}

TEST(Inflection, LineParabolaAndSymmetricCandidates) {
  const SurdFunc u(RatFunc(MultiPoly::variable("u")));
  EXPECT_TRUE(inflection_candidates(ParametricPoint(u, u * SurdFunc(2), "u")).all_parameters);
  const auto parabola = inflection_candidates(ParametricPoint(u, u * u, "u"));
  EXPECT_FALSE(parabola.all_parameters);
  EXPECT_TRUE(parabola.values.empty());

  const ParametricPoint e = hyperbolism("ellipse", parse_bindings("a=2, b=1"), "2");
  const auto c = inflection_candidates(e);
  for (const auto& v : c.values) {
    const double m = v.midpoint().to_double();
    const bool mirrored = std::any_of(c.values.begin(), c.values.end(), [&](const RootInterval& w) {
      return std::abs(w.midpoint().to_double() + m) < 1e-9;
    });
    EXPECT_TRUE(mirrored) << m;
  }
  // The numerator is even or odd in u, which makes the root set symmetric.
  const MultiPoly flipped = c.numerator.substitute("u", -MultiPoly::variable("u"));
  EXPECT_TRUE(flipped == c.numerator || flipped == -c.numerator);
}

TEST(Analyze, ReportsExtraneousAxisAndConic) {
  const AnalysisReport r = analyze(P("x*(9*x^2 - 54*x + 4*y^2)"));
  ASSERT_EQ(r.factors.size(), 2u);
  EXPECT_EQ(r.factors[0].factor.factor, P("x"));
  EXPECT_TRUE(r.factors[0].extraneous);
  EXPECT_FALSE(r.factors[1].extraneous);
  ASSERT_TRUE(r.conic);
  EXPECT_EQ(r.conic->kind, ConicKind::kEllipse);
  const nlohmann::json j = to_json(r);
  EXPECT_EQ(j["irreducibility"]["verdict"], "reducible");
  EXPECT_EQ(j["factors"][0]["extraneous"], true);
  EXPECT_EQ(j["conic"]["center"], nlohmann::json({"3", "0"}));
}

TEST(Analyze, SymbolicAndWithPoint) {
  const AnalysisReport r = analyze(P("r^2*x^2 + x^2*y^2 - r^4"));
  EXPECT_EQ(r.irreducibility.verdict, Irreducibility::kIrreducible);
  EXPECT_FALSE(r.singular.has_value());
  EXPECT_TRUE(r.symmetry.y_axis);
  ASSERT_TRUE(r.asymptotes);
  EXPECT_EQ(r.asymptotes->rational_roots[0].first, Rational(0));

  AnalysisOptions opts;
  opts.bindings = {{"a", 6}, {"b", 4}};
  opts.point = piriform_hyperbolism("");
  const AnalysisReport p = analyze(P("x*(a^2*x^2 - a^3*x + b^2*y^2)"), opts);
  ASSERT_EQ(p.factors.size(), 2u);
  EXPECT_TRUE(p.factors[0].extraneous);
  EXPECT_EQ(p.factors[0].reason, "does not vanish on the construction");
  EXPECT_EQ(canonical_text(p.bound), "9*x^3 + 4*x*y^2 - 54*x^2");
}

}  // namespace
}  // namespace curvelab
