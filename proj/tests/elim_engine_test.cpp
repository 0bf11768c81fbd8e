#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "curvelab/elim/groebner.hpp"
#include "curvelab/elim/implicitize.hpp"
#include "curvelab/elim/resultant.hpp"
#include "curvelab/error.hpp"
#include "curvelab/io/expr.hpp"
#include "curvelab/param/parametric.hpp"
#include "curvelab/poly/gcd.hpp"

namespace curvelab {
namespace {

MultiPoly P(std::string_view s) { return parse_poly(s); }

ParametricPoint point(std::string_view x, std::string_view y, std::string param = "u") {
  return ParametricPoint(ast_to_surd(parse_expression(x)), ast_to_surd(parse_expression(y)), std::move(param));
}

bool contains_associate(const std::vector<MultiPoly>& gens, const MultiPoly& p) {
  return std::any_of(gens.begin(), gens.end(), [&](const MultiPoly& g) { return are_associates(g, p); });
}

TEST(NormalForm, Basics) {
  const auto grevlex = MonomialOrder::grevlex({"x", "y"});
  EXPECT_TRUE(normal_form(P("x^2*y"), {P("x^2")}, grevlex).is_zero());
  const auto lex = MonomialOrder::lex({"x", "y"});
  EXPECT_EQ(normal_form(P("x^2 + y^2"), {P("x - 1")}, lex), P("y^2 + 1"));
  // Remainder is exact over Q, not a scaled copy.
  EXPECT_EQ(normal_form(P("x^2 + 1/3"), {P("2*x - 1")}, lex), P("1/4 + 1/3"));
}

TEST(MonomialOrder, Comparisons) {
  const auto lex = MonomialOrder::lex({"x", "y"});
  EXPECT_EQ(leading_monomial(P("x + y^5"), lex), (std::map<std::string, unsigned>{{"x", 1}}));
  const auto grlex = MonomialOrder::graded_lex({"x", "y", "z"});
  EXPECT_EQ(leading_monomial(P("x*z^2 + y^3"), grlex), (std::map<std::string, unsigned>{{"x", 1}, {"z", 2}}));
  const auto grevlex = MonomialOrder::grevlex({"x", "y", "z"});
  EXPECT_EQ(leading_monomial(P("x*z^2 + y^3"), grevlex), (std::map<std::string, unsigned>{{"y", 3}}));
  const auto elim = MonomialOrder::elimination({"u"}, {"x", "y"});
  EXPECT_EQ(leading_monomial(P("u + x^9*y^9"), elim), (std::map<std::string, unsigned>{{"u", 1}}));
}

TEST(Buchberger, Parabola) {
  const Ideal I{{P("x - u"), P("y - u^2")}, {"u", "x", "y"}};
  const auto gb = buchberger(I, MonomialOrder::elimination({"u"}, {"x", "y"}));
  EXPECT_TRUE(contains_associate(gb, P("y - x^2")));
}

TEST(Buchberger, CircleThroughOriginCubic) {
  const Ideal I{{P("x*(t^2 + 1) - a"), P("y - b*t")}, {"t", "a", "b", "x", "y"}};
  const auto gb = buchberger(I, MonomialOrder::elimination({"t"}, {"a", "b", "x", "y"}));
  EXPECT_TRUE(contains_associate(gb, P("x*y^2 + b^2*x - a*b^2")));
}

TEST(Buchberger, UnitIdeal) {
  const Ideal I{{P("x*y - 1"), P("x")}, {"x", "y"}};
  const auto gb = buchberger(I, MonomialOrder::grevlex({"x", "y"}));
  ASSERT_EQ(gb.size(), 1u);
  EXPECT_EQ(gb[0], MultiPoly(1));
  EXPECT_EQ(buchberger(Ideal{{MultiPoly(1)}, {"x"}}, MonomialOrder::lex({"x"})), std::vector<MultiPoly>{MultiPoly(1)});
}

TEST(Buchberger, ReducedBasisIsPermutationInvariant) {
  std::vector<MultiPoly> gens = {P("x^2 + y^2 + z^2 - 1"), P("x*y - z"), P("x - y + z^2"), P("y^3 - x*z")};
  const auto order = MonomialOrder::grevlex({"x", "y", "z"});
  const auto reference = buchberger(Ideal{gens, {"x", "y", "z"}}, order);
  std::sort(gens.begin(), gens.end(), [](const MultiPoly& a, const MultiPoly& b) { return a.to_string() < b.to_string(); });
  int perms = 0;
  do {
    EXPECT_EQ(buchberger(Ideal{gens, {"x", "y", "z"}}, order), reference);
    ++perms;
  } while (std::next_permutation(gens.begin(), gens.end(), [](const MultiPoly& a, const MultiPoly& b) {
    return a.to_string() < b.to_string();
  }));
  EXPECT_EQ(perms, 24);
  // Adding an ideal member changes nothing.
  gens.push_back(P("(x*y - z)*(x + 3) + (x - y + z^2)*y"));
  EXPECT_EQ(buchberger(Ideal{gens, {"x", "y", "z"}}, order), reference);
}

TEST(Buchberger, BasisReducesIdealMembersToZero) {
  std::mt19937_64 rng(5);
  const std::vector<MultiPoly> gens = {P("x^2*y - a*x + 1"), P("y^2 - a*x*y - 2")};
  const auto order = MonomialOrder::grevlex({"x", "y", "a"});
  const auto gb = buchberger(Ideal{gens, {"x", "y", "a"}}, order);
  std::uniform_int_distribution<int> c(-3, 3);
  for (int trial = 0; trial < 10; ++trial) {
    const MultiPoly h1 = MultiPoly(c(rng)) * P("x") + MultiPoly(c(rng)) * P("y*a") + MultiPoly(c(rng));
    const MultiPoly h2 = MultiPoly(c(rng)) * P("x*y") + MultiPoly(c(rng));
    EXPECT_TRUE(normal_form(h1 * gens[0] + h2 * gens[1], gb, order).is_zero());
  }
  EXPECT_FALSE(normal_form(P("x + 1"), gb, order).is_zero());
}

TEST(Buchberger, DeadlineIsCooperative) {
  const Ideal I{{P("x^5 + y^4 + z^3 - 1"), P("x^3 + y^3 + z^2 - 1"), P("x^2*y*z + a*x - 3")},
                {"x", "y", "z", "a"}};
  const Deadline d = Deadline::after(std::chrono::milliseconds(1));
  d.cancel();
  try {
    buchberger(I, MonomialOrder::lex({"x", "y", "z", "a"}), d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kDeadlineExceeded);
  }
}

TEST(EliminationIdeal, Kulp) {
  const Ideal I{{P("x*(1 + u^2) - r*(1 - u^2)"), P("y*(1 - u^2) - 2*r*u")}, {"u", "r", "x", "y"}};
  const Ideal e = elimination_ideal(I, {"r", "x", "y"});
  ASSERT_EQ(e.generators.size(), 1u);
  EXPECT_TRUE(are_associates(e.generators[0], P("r^2*x^2 + x^2*y^2 - r^4")));
}

TEST(EliminationIdeal, EllipseHyperbolism) {
  const Ideal I{{P("x*(1 + u^2) - a*(1 - u^2)"), P("y*(1 - u^2) - 2*b*u")}, {"u", "a", "b", "x", "y"}};
  const Ideal e = elimination_ideal(I, {"a", "b", "x", "y"});
  ASSERT_EQ(e.generators.size(), 1u);
  EXPECT_TRUE(are_associates(e.generators[0], P("b^2*x^2 + x^2*y^2 - a^2*b^2")));
}

TEST(EliminationIdeal, PiriformDesquared) {
  const Ideal I{{P("(2*x - a)^2 - (a^2 - 4*b^2*t^2)"), P("y - a*t")}, {"t", "a", "b", "x", "y"}};
  const Ideal e = elimination_ideal(I, {"a", "b", "x", "y"});
  ASSERT_FALSE(e.generators.empty());
  EXPECT_TRUE(contains_associate(e.generators, P("a^2*x^2 - a^3*x + b^2*y^2")));
}

TEST(Resultant, CircleThroughOrigin) {
  const MultiPoly r = sylvester_resultant(P("x*(t^2 + 1) - a"), P("y - b*t"), "t");
  EXPECT_TRUE(are_associates(r, P("x*(y^2 + b^2) - a*b^2")));
}

TEST(Resultant, Parabola) {
  EXPECT_TRUE(are_associates(sylvester_resultant(P("x - u"), P("y - u^2"), "u"), P("y - x^2")));
}

TEST(Resultant, Gerono) {
  const auto m = point("a*(1-u^2)/(1+u^2)", "2*a^2*u*(1-u^2)/(b*(1+u^2)^2)");
  const auto [p1, p2] = clear_to_system(m);
  const MultiPoly r = sylvester_resultant(p1, p2, "u");
  EXPECT_EQ(content_primitive(r, {"x", "y"}).primitive, P("x^4 - a^2*x^2 + b^2*y^2"));
}

TEST(Resultant, MatchesProductOfRootDifferences) {
  // Res_u((u-1)(u-2), (u-3)) = (1-3)(2-3) = 2 with monic inputs.
  EXPECT_EQ(sylvester_resultant(P("(u-1)*(u-2)"), P("u-3"), "u"), MultiPoly(2));
  // Res(p, q) = (-1)^(deg p deg q) Res(q, p)
  const MultiPoly p = P("u^3 + a*u - x"), q = P("u^2 - y*u + 1");
  EXPECT_EQ(sylvester_resultant(p, q, "u"), sylvester_resultant(q, p, "u"));
  const MultiPoly q3 = P("u^3 - y");
  EXPECT_EQ(sylvester_resultant(p, q3, "u"), -sylvester_resultant(q3, p, "u"));
  const MultiPoly q1 = P("u - y");
  EXPECT_EQ(sylvester_resultant(p, q1, "u"), -sylvester_resultant(q1, p, "u"));
  EXPECT_THROW(sylvester_resultant(P("x"), P("u"), "u"), Error);
}

TEST(Implicitize, Kulp) {
  const auto m = point("r*(1-u^2)/(1+u^2)", "r*2*u/(1-u^2)");
  ImplicitizeOptions opts;
  opts.method = ElimMethod::kBoth;
  const ImplicitCurve c = implicitize(m, opts);
  EXPECT_EQ(canonical_text(c.defining), "r^2*x^2 + x^2*y^2 - r^4");
  ASSERT_TRUE(c.provenance.paths_agree.has_value());
  EXPECT_TRUE(*c.provenance.paths_agree);
  EXPECT_EQ(c.degree_xy, 4);
}

TEST(Implicitize, Parabola) {
  const ImplicitCurve c = implicitize(point("u", "u^2"));
  EXPECT_EQ(canonical_text(c.defining), "x^2 - y");
}

TEST(Implicitize, ConstantCoordinate) {
  const ImplicitCurve c = implicitize(point("2*a", "u^3"));
  EXPECT_EQ(canonical_text(c.defining), "x - 2*a");
  EXPECT_THROW(implicitize(point("1", "a")), Error);
}

TEST(Implicitize, GeronoStripsContent) {
  const auto m = point("a*(1-u^2)/(1+u^2)", "2*a^2*u*(1-u^2)/(b*(1+u^2)^2)");
  ImplicitizeOptions opts;
  opts.method = ElimMethod::kBoth;
  const ImplicitCurve c = implicitize(m, opts);
  EXPECT_EQ(canonical_text(c.defining), "x^4 - a^2*x^2 + b^2*y^2");
  EXPECT_TRUE(c.provenance.paths_agree.value_or(false));
  ASSERT_FALSE(c.provenance.removed.empty());
  EXPECT_EQ(c.provenance.removed[0].reason, "pure-parameter factor");
}

TEST(Implicitize, NephroidHyperbolismDegreeTwelve) {
  const RatFunc x0(P("16*a*u^3"), P("(1+u^2)^3"));
  const RatFunc y0(P("a*(-u^6 - 9*u^4 + 9*u^2 + 1)"), P("(1+u^2)^3"));
  const ParametricPoint m(SurdFunc(x0), SurdFunc(RatFunc(P("b")) * y0 / x0), "u");
  const ImplicitCurve c = implicitize(m);
  EXPECT_EQ(c.total_degree, 12);
  EXPECT_TRUE(verify_on_curve(c.defining, m));
  ImplicitizeOptions opts;
  opts.method = ElimMethod::kGroebner;
  const ImplicitCurve g = implicitize(m, opts);
  EXPECT_TRUE(are_associates(g.defining, c.defining));
}

}  // namespace
}  // namespace curvelab
