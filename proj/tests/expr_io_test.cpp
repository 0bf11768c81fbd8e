#include <gtest/gtest.h>

#include <fstream>
#include <sstream>

#include "curvelab/error.hpp"
#include "curvelab/io/construction.hpp"
#include "curvelab/io/expr.hpp"

#ifndef CURVELAB_FIXTURE_DIR
#error "CURVELAB_FIXTURE_DIR must be defined"
#endif

namespace curvelab {
namespace {

std::string read_fixture(const std::string& rel) {
  std::ifstream in(std::string(CURVELAB_FIXTURE_DIR) + "/" + rel);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(ParseExpression, KulpQuarticIsThreeTermSum) {
  const ExprAst ast = parse_expression("r^2*x^2 + x^2*y^2 - r^4");
  EXPECT_EQ(ast.kind, ExprAst::Kind::kSub);
  EXPECT_EQ(ast.children[0].kind, ExprAst::Kind::kAdd);
  EXPECT_EQ(ast_to_poly(ast).size(), 3u);
}

TEST(ParseExpression, SingleVariable) {
  const ExprAst ast = parse_expression("  x ");
  EXPECT_EQ(ast.kind, ExprAst::Kind::kVariable);
  EXPECT_EQ(ast.name, "x");
}

TEST(ParseExpression, TrigCall) {
  const ExprAst ast = parse_expression("2*a*sin(t)^3");
  ASSERT_EQ(ast.kind, ExprAst::Kind::kMul);
  const ExprAst& pow = ast.children[1];
  ASSERT_EQ(pow.kind, ExprAst::Kind::kPow);
  EXPECT_EQ(pow.children[0].kind, ExprAst::Kind::kCall);
  EXPECT_EQ(pow.children[0].name, "sin");
  EXPECT_TRUE(ast.contains_call());
}

TEST(AstToPoly, Piriform) {
  EXPECT_EQ(parse_poly("b^2*y^2 - x^3*(a-x)"), parse_poly("x^4 - a*x^3 + b^2*y^2"));
  EXPECT_TRUE(parse_poly("(x+1)^2 - x^2 - 2*x - 1").is_zero());
}

TEST(AstToPoly, NephroidExpandsToThirteenTerms) {
  // Independent count: the 10 monomials of (x^2 + y^2 - a^2)^3 are
  // x^(2i) y^(2j) a^(2k) with i+j+k = 3, all with nonzero coefficient.
  // Subtracting 27*a^4*x^2 merges into the (i,j,k) = (1,0,2) monomial
  // (coefficient 4*3 - 27 = -15), so the count stays 10. The "- a^2" sign
  // does not cancel any term either.
  const MultiPoly p = parse_poly("4*(x^2+y^2-a^2)^3 - 27*a^4*x^2");
  EXPECT_EQ(p.total_degree(), 6);
  EXPECT_EQ(p.size(), 10u);
}

TEST(ParseConstruction, GeronoFixture) {
  const ConstructionProgram prog = parse_construction(read_fixture("gerono.dsl"));
  EXPECT_EQ(prog.steps.size(), 5u);
  EXPECT_EQ(prog.traced, "M");
  EXPECT_EQ(prog.mover, "M0");
  EXPECT_EQ(prog.params, (std::vector<std::string>{"a", "b"}));
}

TEST(ParseConstruction, MissingLocus) {
  try {
    parse_construction("param a\npoint M = on_curve(circle(r=a))\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSemantic);
  }
}

TEST(ParseConstruction, MacroExpandsToFourSteps) {
  const auto prog = parse_construction("param r\npoint M = hyperbolism(circle(r=r), x=r)\nlocus M\n");
  ASSERT_EQ(prog.steps.size(), 4u);
  EXPECT_EQ(prog.steps[0].point.kind, PointExpr::Kind::kOnCurve);
  EXPECT_EQ(prog.steps[1].kind, ConstructionStep::Kind::kLine);
  EXPECT_EQ(prog.steps[3].name, "M");
  const auto anti = parse_construction("param a\nparam b\npoint M = antihyperbolism(circle_origin(a=a), x=b)\nlocus M");
  EXPECT_EQ(anti.steps.size(), 4u);
}

TEST(ParseConstruction, ErrorsCarryLineAndColumn) {
  try {
    parse_construction("param a\npoint M0 = on_curve(circle(r=a))\nline D = vertical(x=q)\nlocus M0\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kUnknownIdentifier);
    ASSERT_TRUE(e.location().has_value());
    EXPECT_EQ(e.location()->line, 3u);
    EXPECT_EQ(e.location()->column, 21u);
  }
  try {
    parse_construction("param a\npoint M = intersect(D, D)\nlocus M\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSemantic);
    EXPECT_EQ(e.location()->line, 2u);
  }
  try {
    parse_construction("param a\npoint P = (a, 1\nlocus P\n");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntax);
    EXPECT_EQ(e.location()->line, 2u);
  }
  EXPECT_THROW(parse_construction("param a\nparam a\npoint P=(a,a)\nlocus P"), Error);
  EXPECT_THROW(parse_construction("point P=(0,0)\nlocus P\npoint Q=(1,1)"), Error);
  EXPECT_THROW(
      parse_construction("point A = on_curve(circle)\npoint B = on_curve(parabola)\nlocus B"),
      Error);
}

// Valid programs assembled from the grammar's productions must all parse and
// survive a render/parse round trip.
TEST(ParseConstruction, GeneratedCorpusParses) {
  const std::vector<std::string> points = {"O", "M0", "(a, 0)", "(1/2, b^2)"};
  const std::vector<std::string> lines = {
      "vertical(x=b)", "horizontal(y=-a)", "line_through(O, M0)", "vertical_through(M0)",
      "horizontal_through((a, 1))", "D"};
  int count = 0;
  for (const auto& p : points) {
    for (const auto& l1 : lines) {
      for (const auto& l2 : lines) {
        std::string src = "param a\nparam b\npoint O = (0, 0)\npoint M0 = on_curve(ellipse(a=a, b=b))\n"
                          "line D = line_through(" + p + ", O)\n"
                          "point M = intersect(" + l1 + ", " + l2 + ")\nlocus M\n";
        const ConstructionProgram prog = parse_construction(src);
        EXPECT_EQ(prog.steps.size(), 4u);
        const ConstructionProgram again = parse_construction(render_construction(prog));
        EXPECT_EQ(render_construction(again), render_construction(prog));
        ++count;
      }
    }
  }
  EXPECT_EQ(count, 144);
}

}  // namespace
}  // namespace curvelab
