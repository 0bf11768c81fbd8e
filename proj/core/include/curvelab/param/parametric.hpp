#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvelab/io/expr.hpp"
#include "curvelab/param/ratfunc.hpp"
#include "curvelab/param/surd.hpp"

namespace curvelab {

/// A point (x(u), y(u)) moving with one parameter. All other variables in
/// the coordinates are symbolic curve parameters.
struct ParametricPoint {
  SurdFunc x;
  SurdFunc y;
  std::string parameter = "u";
  /// Normalized squarefree polynomials whose roots (in the parameter) are
  /// excluded: coordinate poles and degenerate construction values.
  std::vector<MultiPoly> excluded;
  /// Human-readable remarks, e.g. the point missed at parameter infinity.
  std::vector<std::string> notes;

  ParametricPoint() = default;
  ParametricPoint(SurdFunc px, SurdFunc py, std::string param);

  bool is_rational() const { return x.is_rational() && y.is_rational(); }
  /// Symbolic parameters: every variable except the moving one.
  std::vector<std::string> symbols() const;

  /// Adds the squarefree part of p to the excluded set when it involves the
  /// parameter (duplicates up to scalar are dropped).
  void exclude(const MultiPoly& p);
  /// Re-derives coordinate poles into the excluded set.
  void exclude_poles();

  /// Finite limit of the point as the parameter goes to infinity, when both
  /// coordinates are rational and stay bounded.
  std::optional<std::pair<RatFunc, RatFunc>> limit_at_infinity() const;

  /// Bind symbolic parameters to rationals.
  ParametricPoint bind(const Assignment& values) const;
};

/// Converts an expression in trig_var (with cos/sin/tan of trig_var only)
/// into a rational function of new_var via the tangent half-angle
/// substitution. Throws kUnsupportedFunction for any other call.
RatFunc weierstrass_substitute(const ExprAst& ast, std::string_view trig_var, std::string_view new_var);

/// Converts a call-free expression (division and negative powers allowed)
/// into a rational function.
RatFunc ast_to_ratfunc(const ExprAst& ast);

/// Like ast_to_ratfunc but admits sqrt(...) calls sharing a single radicand.
SurdFunc ast_to_surd(const ExprAst& ast);

/// Polynomial system whose common zeros with (x, y) contain the point:
/// coordinate var minus rational value, cleared as var*den - num, or the
/// desquared form for a coordinate with a square root.
std::pair<MultiPoly, MultiPoly> clear_to_system(const ParametricPoint& point);

/// (var - a)^2 - b^2 g with denominators cleared, for var = a + b*sqrt(g).
MultiPoly desquare(std::string_view var, const SurdFunc& value);

/// Exact identity test: F(x(u), y(u)) == 0 as a function of u and the
/// symbolic parameters.
bool verify_on_curve(const MultiPoly& F, const ParametricPoint& point);

}  // namespace curvelab
