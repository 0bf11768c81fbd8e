#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "curvelab/error.hpp"
#include "curvelab/poly/multipoly.hpp"

namespace curvelab {

/// Parsed arithmetic expression. Children are held by value.
struct ExprAst {
  enum class Kind { kNumber, kVariable, kAdd, kSub, kMul, kDiv, kPow, kNeg, kCall };

  Kind kind = Kind::kNumber;
  Rational number;        // kNumber
  std::string name;       // kVariable, kCall (function name)
  std::vector<ExprAst> children;
  std::size_t offset = 0;  // byte offset of the node in the source text

  static ExprAst make_number(const Rational& value, std::size_t offset = 0);
  static ExprAst make_variable(std::string name, std::size_t offset = 0);
  static ExprAst make_binary(Kind kind, ExprAst lhs, ExprAst rhs, std::size_t offset = 0);
  static ExprAst make_unary(Kind kind, ExprAst operand, std::size_t offset = 0);
  static ExprAst make_call(std::string fn, ExprAst arg, std::size_t offset = 0);

  bool contains_call() const;
  void collect_variables(std::set<std::string>& out) const;
};

inline constexpr std::string_view kFunctions[] = {"cos", "sin", "tan", "sqrt"};
bool is_known_function(std::string_view name);

/// Lexical token shared by the expression and construction parsers.
struct Token {
  enum class Kind { kNumber, kIdent, kPunct, kNewline, kEnd };
  Kind kind = Kind::kEnd;
  std::string text;
  SourceLocation loc;
};

std::vector<Token> tokenize(std::string_view text);

/// Recursive-descent parser over a token stream; stops at the first token
/// that cannot continue an expression.
class ExprParser {
 public:
  ExprParser(const std::vector<Token>& tokens, std::size_t& pos,
             const std::optional<std::set<std::string>>& declared)
      : tokens_(tokens), pos_(pos), declared_(declared) {}

  ExprAst parse();

 private:
  ExprAst parse_sum();
  ExprAst parse_product();
  ExprAst parse_unary();
  ExprAst parse_power();
  ExprAst parse_primary();
  const Token& peek() const { return tokens_[pos_]; }
  bool accept(std::string_view punct);
  [[noreturn]] void fail(const std::string& message) const;

  const std::vector<Token>& tokens_;
  std::size_t& pos_;
  const std::optional<std::set<std::string>>& declared_;
};

/// Parses a whole expression. When `declared` is set, identifiers outside it
/// raise kUnknownIdentifier.
ExprAst parse_expression(std::string_view text,
                         const std::optional<std::set<std::string>>& declared = std::nullopt);

/// Expands the AST into a polynomial. Division is allowed only by nonzero
/// constants and exponents must be nonnegative integer constants.
MultiPoly ast_to_poly(const ExprAst& ast);

/// Convenience: parse_expression followed by ast_to_poly.
MultiPoly parse_poly(std::string_view text,
                     const std::optional<std::set<std::string>>& declared = std::nullopt);

/// Replaces variable nodes by the mapped expressions (simultaneously).
ExprAst substitute_variables(const ExprAst& ast, const std::map<std::string, ExprAst, std::less<>>& values);

/// Fully parenthesised rendering of an AST (diagnostics only).
std::string render_ast(const ExprAst& ast);

/// Golden-file rendering: integer-cleared, content-free, positive leading
/// coefficient, explicit '*', '^' powers, canonical graded term order.
std::string canonical_text(const MultiPoly& p);

}  // namespace curvelab
