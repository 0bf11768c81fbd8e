#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "curvelab/error.hpp"
#include "curvelab/io/expr.hpp"

namespace curvelab {

/// Reference to a catalog curve with parameter bindings, e.g. circle(r=a).
struct CurveRef {
  std::string name;
  std::vector<std::pair<std::string, ExprAst>> bindings;
};

/// Either a named point or a literal coordinate pair.
struct PointRef {
  std::string name;  // empty for a literal
  std::optional<std::pair<ExprAst, ExprAst>> literal;
};

struct LineExpr {
  enum class Kind { kVertical, kHorizontal, kThrough, kVerticalThrough, kHorizontalThrough };
  Kind kind = Kind::kVertical;
  ExprAst value;  // kVertical (x = value), kHorizontal (y = value)
  PointRef a;     // kThrough, kVerticalThrough, kHorizontalThrough
  PointRef b;     // kThrough
};

/// Either a named line or an inline line expression.
struct LineRef {
  std::string name;  // empty for inline
  std::optional<LineExpr> inline_expr;
};

struct PointExpr {
  enum class Kind { kOnCurve, kIntersect, kLiteral };
  Kind kind = Kind::kLiteral;
  CurveRef curve;        // kOnCurve
  LineRef first, second;  // kIntersect
  ExprAst x, y;          // kLiteral
};

struct ConstructionStep {
  enum class Kind { kPoint, kLine };
  Kind kind = Kind::kPoint;
  std::string name;
  PointExpr point;
  LineExpr line;
  SourceLocation loc;
};

struct ConstructionProgram {
  std::vector<std::string> params;
  std::vector<ConstructionStep> steps;
  std::string traced;
  /// Name of the unique on_curve point, empty when the program has none.
  std::string mover;
};

/// Parses and validates a construction program. Besides the core statements,
/// `point M = hyperbolism(curve, x=expr)` and the antihyperbolism form expand
/// into their four primitive steps.
ConstructionProgram parse_construction(std::string_view text);

/// Line-oriented rendering of a program (expanded form).
std::string render_construction(const ConstructionProgram& program);

}  // namespace curvelab
