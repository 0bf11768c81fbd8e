#include "curvelab/io/expr.hpp"

#include <algorithm>
#include <cctype>

#include "curvelab/poly/gcd.hpp"

namespace curvelab {

ExprAst ExprAst::make_number(const Rational& value, std::size_t offset) {
  ExprAst a;
  a.kind = Kind::kNumber;
  a.number = value;
  a.offset = offset;
  return a;
}

ExprAst ExprAst::make_variable(std::string name, std::size_t offset) {
  ExprAst a;
  a.kind = Kind::kVariable;
  a.name = std::move(name);
  a.offset = offset;
  return a;
}

ExprAst ExprAst::make_binary(Kind kind, ExprAst lhs, ExprAst rhs, std::size_t offset) {
  ExprAst a;
  a.kind = kind;
  a.offset = offset;
  a.children.push_back(std::move(lhs));
  a.children.push_back(std::move(rhs));
  return a;
}

ExprAst ExprAst::make_unary(Kind kind, ExprAst operand, std::size_t offset) {
  ExprAst a;
  a.kind = kind;
  a.offset = offset;
  a.children.push_back(std::move(operand));
  return a;
}

ExprAst ExprAst::make_call(std::string fn, ExprAst arg, std::size_t offset) {
  ExprAst a = make_unary(Kind::kCall, std::move(arg), offset);
  a.name = std::move(fn);
  return a;
}

bool ExprAst::contains_call() const {
  if (kind == Kind::kCall) return true;
  return std::any_of(children.begin(), children.end(),
                     [](const ExprAst& c) { return c.contains_call(); });
}

void ExprAst::collect_variables(std::set<std::string>& out) const {
  if (kind == Kind::kVariable) out.insert(name);
  for (const auto& c : children) c.collect_variables(out);
}

ExprAst substitute_variables(const ExprAst& ast, const std::map<std::string, ExprAst, std::less<>>& values) {
  if (ast.kind == ExprAst::Kind::kVariable) {
    const auto it = values.find(ast.name);
    return it == values.end() ? ast : it->second;
  }
  ExprAst out = ast;
  for (auto& c : out.children) c = substitute_variables(c, values);
  return out;
}

bool is_known_function(std::string_view name) {
  return std::find(std::begin(kFunctions), std::end(kFunctions), name) != std::end(kFunctions);
}

std::vector<Token> tokenize(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1, col = 1;
  std::size_t i = 0;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
      ++i;
    }
  };
  while (i < text.size()) {
    const char c = text[i];
    const SourceLocation loc{i, line, col};
    if (c == '#') {
      while (i < text.size() && text[i] != '\n') advance(1);
      continue;
    }
    if (c == '\n') {
      out.push_back(Token{Token::Kind::kNewline, "\n", loc});
      advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) ||
        (c == '.' && i + 1 < text.size() && std::isdigit(static_cast<unsigned char>(text[i + 1])))) {
      std::size_t j = i;
      bool dot = false;
      while (j < text.size() && (std::isdigit(static_cast<unsigned char>(text[j])) || (text[j] == '.' && !dot))) {
        if (text[j] == '.') dot = true;
        ++j;
      }
      out.push_back(Token{Token::Kind::kNumber, std::string(text.substr(i, j - i)), loc});
      advance(j - i);
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '_')) {
        ++j;
      }
      out.push_back(Token{Token::Kind::kIdent, std::string(text.substr(i, j - i)), loc});
      advance(j - i);
      continue;
    }
    if (std::string_view("+-*/^(),=").find(c) != std::string_view::npos) {
      out.push_back(Token{Token::Kind::kPunct, std::string(1, c), loc});
      advance(1);
      continue;
    }
    throw Error(ErrorCode::kSyntax, std::string("unexpected character '") + c + "'", loc);
  }
  out.push_back(Token{Token::Kind::kEnd, "", SourceLocation{i, line, col}});
  return out;
}

bool ExprParser::accept(std::string_view punct) {
  if (peek().kind == Token::Kind::kPunct && peek().text == punct) {
    ++pos_;
    return true;
  }
  return false;
}

void ExprParser::fail(const std::string& message) const {
  const Token& t = peek();
  const std::string found = t.kind == Token::Kind::kEnd       ? "end of input"
                            : t.kind == Token::Kind::kNewline ? "end of line"
                                                              : "'" + t.text + "'";
  throw Error(ErrorCode::kSyntax, message + " at offset " + std::to_string(t.loc.offset) +
                                      " (found " + found + ")",
              t.loc);
}

ExprAst ExprParser::parse() { return parse_sum(); }

ExprAst ExprParser::parse_sum() {
  ExprAst lhs = parse_product();
  while (true) {
    const std::size_t off = peek().loc.offset;
    if (accept("+")) {
      lhs = ExprAst::make_binary(ExprAst::Kind::kAdd, std::move(lhs), parse_product(), off);
    } else if (accept("-")) {
      lhs = ExprAst::make_binary(ExprAst::Kind::kSub, std::move(lhs), parse_product(), off);
    } else {
      return lhs;
    }
  }
}

ExprAst ExprParser::parse_product() {
  ExprAst lhs = parse_unary();
  while (true) {
    const std::size_t off = peek().loc.offset;
    if (accept("*")) {
      lhs = ExprAst::make_binary(ExprAst::Kind::kMul, std::move(lhs), parse_unary(), off);
    } else if (accept("/")) {
      lhs = ExprAst::make_binary(ExprAst::Kind::kDiv, std::move(lhs), parse_unary(), off);
    } else {
      return lhs;
    }
  }
}

ExprAst ExprParser::parse_unary() {
  const std::size_t off = peek().loc.offset;
  if (accept("-")) return ExprAst::make_unary(ExprAst::Kind::kNeg, parse_unary(), off);
  if (accept("+")) return parse_unary();
  return parse_power();
}

ExprAst ExprParser::parse_power() {
  ExprAst base = parse_primary();
  const std::size_t off = peek().loc.offset;
  if (accept("^")) {
    // Right associative; the exponent may carry a sign.
    return ExprAst::make_binary(ExprAst::Kind::kPow, std::move(base), parse_unary(), off);
  }
  return base;
}

ExprAst ExprParser::parse_primary() {
  const Token& t = peek();
  if (t.kind == Token::Kind::kNumber) {
    ++pos_;
    return ExprAst::make_number(Rational::parse(t.text), t.loc.offset);
  }
  if (t.kind == Token::Kind::kIdent) {
    ++pos_;
    if (is_known_function(t.text)) {
      if (!accept("(")) fail("expected '(' after function '" + t.text + "'");
      ExprAst arg = parse_sum();
      if (!accept(")")) fail("expected ')' closing call to '" + t.text + "'");
      return ExprAst::make_call(t.text, std::move(arg), t.loc.offset);
    }
    if (declared_ && !declared_->count(t.text)) {
      throw Error(ErrorCode::kUnknownIdentifier,
                  "unknown identifier '" + t.text + "' at offset " + std::to_string(t.loc.offset),
                  t.loc);
    }
    return ExprAst::make_variable(t.text, t.loc.offset);
  }
  if (accept("(")) {
    ExprAst inner = parse_sum();
    if (!accept(")")) fail("expected ')'");
    return inner;
  }
  fail("expected a number, identifier or '('");
}

ExprAst parse_expression(std::string_view text, const std::optional<std::set<std::string>>& declared) {
  const auto tokens = tokenize(text);
  std::size_t pos = 0;
  while (tokens[pos].kind == Token::Kind::kNewline) ++pos;
  if (tokens[pos].kind == Token::Kind::kEnd) {
    throw Error(ErrorCode::kSyntax, "empty expression", tokens[pos].loc);
  }
  ExprParser parser(tokens, pos, declared);
  ExprAst ast = parser.parse();
  while (tokens[pos].kind == Token::Kind::kNewline) ++pos;
  if (tokens[pos].kind != Token::Kind::kEnd) {
    const auto& t = tokens[pos];
    throw Error(ErrorCode::kSyntax,
                "unexpected '" + t.text + "' at offset " + std::to_string(t.loc.offset) +
                    " (implicit multiplication is not accepted; write '*')",
                t.loc);
  }
  return ast;
}

namespace {

[[noreturn]] void non_polynomial(const ExprAst& node, const std::string& why) {
  throw Error(ErrorCode::kNonPolynomial,
              why + " in '" + render_ast(node) + "' at offset " + std::to_string(node.offset),
              SourceLocation{node.offset, 0, 0});
}

}  // namespace

MultiPoly ast_to_poly(const ExprAst& ast) {
  using K = ExprAst::Kind;
  switch (ast.kind) {
    case K::kNumber: return MultiPoly(ast.number);
    case K::kVariable: return MultiPoly::variable(ast.name);
    case K::kAdd: return ast_to_poly(ast.children[0]) + ast_to_poly(ast.children[1]);
    case K::kSub: return ast_to_poly(ast.children[0]) - ast_to_poly(ast.children[1]);
    case K::kMul: return ast_to_poly(ast.children[0]) * ast_to_poly(ast.children[1]);
    case K::kNeg: return -ast_to_poly(ast.children[0]);
    case K::kDiv: {
      const MultiPoly den = ast_to_poly(ast.children[1]);
      if (!den.is_constant()) non_polynomial(ast, "division by a non-constant");
      if (den.is_zero()) non_polynomial(ast, "division by zero");
      return ast_to_poly(ast.children[0]) * (Rational(1) / den.constant_value());
    }
    case K::kPow: {
      const MultiPoly e = ast_to_poly(ast.children[1]);
      if (!e.is_constant()) non_polynomial(ast, "non-constant exponent");
      const Rational v = e.constant_value();
      if (!v.is_integer() || v.sign() < 0 || v > Rational(4096)) {
        non_polynomial(ast, "exponent must be a nonnegative integer");
      }
      return ast_to_poly(ast.children[0]).pow(static_cast<unsigned>(v.num().get_ui()));
    }
    case K::kCall: non_polynomial(ast, "function call '" + ast.name + "'");
  }
  non_polynomial(ast, "unsupported node");
}

MultiPoly parse_poly(std::string_view text, const std::optional<std::set<std::string>>& declared) {
  return ast_to_poly(parse_expression(text, declared));
}

std::string render_ast(const ExprAst& ast) {
  using K = ExprAst::Kind;
  auto bin = [&](const char* op) {
    return "(" + render_ast(ast.children[0]) + op + render_ast(ast.children[1]) + ")";
  };
  switch (ast.kind) {
    case K::kNumber: return ast.number.to_string();
    case K::kVariable: return ast.name;
    case K::kAdd: return bin(" + ");
    case K::kSub: return bin(" - ");
    case K::kMul: return bin("*");
    case K::kDiv: return bin("/");
    case K::kPow: return bin("^");
    case K::kNeg: return "(-" + render_ast(ast.children[0]) + ")";
    case K::kCall: return ast.name + "(" + render_ast(ast.children[0]) + ")";
  }
  return "?";
}

std::string canonical_text(const MultiPoly& p) { return normalize(p).to_string(); }

}  // namespace curvelab
