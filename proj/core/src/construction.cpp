#include "curvelab/io/construction.hpp"

#include <map>
#include <set>
#include <sstream>

namespace curvelab {

namespace {

std::string where(const SourceLocation& loc) {
  return "line " + std::to_string(loc.line) + ", column " + std::to_string(loc.column) + ": ";
}

class ProgramParser {
 public:
  explicit ProgramParser(std::string_view text) : tokens_(tokenize(text)) {}

  ConstructionProgram parse() {
    skip_newlines();
    while (peek().kind != Token::Kind::kEnd) {
      const Token& kw = peek();
      if (kw.kind != Token::Kind::kIdent) syntax("expected a statement keyword");
      if (kw.text == "locus") {
        parse_locus();
        skip_newlines();
        if (peek().kind != Token::Kind::kEnd) syntax("nothing may follow the locus statement");
        break;
      }
      if (kw.text == "param") {
        parse_param();
      } else if (kw.text == "point") {
        parse_point();
      } else if (kw.text == "line") {
        parse_line_stmt();
      } else {
        syntax("unknown statement '" + kw.text + "'");
      }
      end_of_statement();
    }
    if (!has_locus_) {
      throw Error(ErrorCode::kSemantic, where(peek().loc) + "program has no locus statement",
                  peek().loc);
    }
    return std::move(program_);
  }

 private:
  enum class Kind { kParam, kPoint, kLine };

  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  void skip_newlines() {
    while (peek().kind == Token::Kind::kNewline) ++pos_;
  }

  [[noreturn]] void syntax(const std::string& message) const {
    const Token& t = peek();
    const std::string found = t.kind == Token::Kind::kEnd       ? "end of input"
                              : t.kind == Token::Kind::kNewline ? "end of line"
                                                                : "'" + t.text + "'";
    throw Error(ErrorCode::kSyntax, where(t.loc) + message + " (found " + found + ")", t.loc);
  }

  [[noreturn]] static void semantic(const SourceLocation& loc, const std::string& message) {
    throw Error(ErrorCode::kSemantic, where(loc) + message, loc);
  }

  void expect(std::string_view punct) {
    if (peek().kind == Token::Kind::kPunct && peek().text == punct) {
      ++pos_;
      return;
    }
    syntax("expected '" + std::string(punct) + "'");
  }

  bool accept(std::string_view punct) {
    if (peek().kind == Token::Kind::kPunct && peek().text == punct) {
      ++pos_;
      return true;
    }
    return false;
  }

  const Token& expect_ident(const std::string& what) {
    if (peek().kind != Token::Kind::kIdent) syntax("expected " + what);
    return next();
  }

  void expect_keyword(std::string_view kw) {
    if (peek().kind != Token::Kind::kIdent || peek().text != kw) {
      syntax("expected '" + std::string(kw) + "'");
    }
    ++pos_;
  }

  void end_of_statement() {
    if (peek().kind == Token::Kind::kEnd) return;
    if (peek().kind != Token::Kind::kNewline) syntax("expected end of line");
    skip_newlines();
  }

  ExprAst expr() {
    ExprParser parser(tokens_, pos_, declared_params_);
    return parser.parse();
  }

  void define(const Token& name, Kind kind) {
    if (is_known_function(name.text) || name.text == "x" || name.text == "y") {
      semantic(name.loc, "'" + name.text + "' is reserved");
    }
    if (!names_.emplace(name.text, kind).second) {
      semantic(name.loc, "duplicate definition of '" + name.text + "'");
    }
  }

  void require(const Token& name, Kind kind) {
    const auto it = names_.find(name.text);
    if (it == names_.end()) semantic(name.loc, "undefined name '" + name.text + "'");
    if (it->second != kind) {
      semantic(name.loc, "'" + name.text + "' is not a " +
                             (kind == Kind::kPoint ? "point" : kind == Kind::kLine ? "line" : "param"));
    }
  }

  void parse_param() {
    ++pos_;
    const Token& name = expect_ident("a parameter name");
    define(name, Kind::kParam);
    if (!declared_params_) declared_params_.emplace();
    declared_params_->insert(name.text);
    program_.params.push_back(name.text);
  }

  void parse_locus() {
    ++pos_;
    const Token& name = expect_ident("the traced point name");
    require(name, Kind::kPoint);
    program_.traced = name.text;
    has_locus_ = true;
  }

  CurveRef curve_ref() {
    CurveRef ref;
    ref.name = expect_ident("a curve name").text;
    if (accept("(")) {
      if (!accept(")")) {
        do {
          const Token& key = expect_ident("a parameter binding");
          expect("=");
          ref.bindings.emplace_back(key.text, expr());
        } while (accept(","));
        expect(")");
      }
    }
    return ref;
  }

  PointRef point_ref() {
    PointRef ref;
    if (accept("(")) {
      ExprAst x = expr();
      expect(",");
      ExprAst y = expr();
      expect(")");
      ref.literal.emplace(std::move(x), std::move(y));
      return ref;
    }
    const Token& name = expect_ident("a point name or '(x, y)'");
    require(name, Kind::kPoint);
    ref.name = name.text;
    return ref;
  }

  bool at_line_keyword() const {
    if (peek().kind != Token::Kind::kIdent) return false;
    const std::string& t = peek().text;
    return t == "vertical" || t == "horizontal" || t == "line_through" ||
           t == "vertical_through" || t == "horizontal_through";
  }

  LineExpr line_expr() {
    if (!at_line_keyword()) syntax("expected a line expression");
    const std::string kw = next().text;
    LineExpr line;
    expect("(");
    if (kw == "vertical" || kw == "horizontal") {
      line.kind = kw == "vertical" ? LineExpr::Kind::kVertical : LineExpr::Kind::kHorizontal;
      expect_keyword(kw == "vertical" ? "x" : "y");
      expect("=");
      line.value = expr();
    } else if (kw == "line_through") {
      line.kind = LineExpr::Kind::kThrough;
      line.a = point_ref();
      expect(",");
      line.b = point_ref();
    } else {
      line.kind = kw == "vertical_through" ? LineExpr::Kind::kVerticalThrough
                                           : LineExpr::Kind::kHorizontalThrough;
      line.a = point_ref();
    }
    expect(")");
    return line;
  }

  LineRef line_ref() {
    LineRef ref;
    if (at_line_keyword()) {
      ref.inline_expr = line_expr();
      return ref;
    }
    const Token& name = expect_ident("a line name or line expression");
    require(name, Kind::kLine);
    ref.name = name.text;
    return ref;
  }

  void note_mover(const Token& at, const std::string& name) {
    if (!program_.mover.empty()) {
      semantic(at.loc, "a program may contain only one on_curve point (already '" +
                           program_.mover + "')");
    }
    program_.mover = name;
  }

  void parse_point() {
    ++pos_;
    const Token& name = expect_ident("a point name");
    expect("=");
    const Token& head = peek();
    ConstructionStep step;
    step.kind = ConstructionStep::Kind::kPoint;
    step.name = name.text;
    step.loc = name.loc;
    if (head.kind == Token::Kind::kIdent && (head.text == "hyperbolism" || head.text == "antihyperbolism")) {
      parse_macro(name, head.text == "hyperbolism");
      return;
    }
    if (head.kind == Token::Kind::kIdent && head.text == "on_curve") {
      ++pos_;
      expect("(");
      step.point.kind = PointExpr::Kind::kOnCurve;
      step.point.curve = curve_ref();
      expect(")");
      note_mover(head, name.text);
    } else if (head.kind == Token::Kind::kIdent && head.text == "intersect") {
      ++pos_;
      expect("(");
      step.point.kind = PointExpr::Kind::kIntersect;
      step.point.first = line_ref();
      expect(",");
      step.point.second = line_ref();
      expect(")");
    } else if (accept("(")) {
      step.point.kind = PointExpr::Kind::kLiteral;
      step.point.x = expr();
      expect(",");
      step.point.y = expr();
      expect(")");
    } else {
      syntax("expected on_curve(...), intersect(...), a macro or '(x, y)'");
    }
    define(name, Kind::kPoint);
    program_.steps.push_back(std::move(step));
  }

  void parse_line_stmt() {
    ++pos_;
    const Token& name = expect_ident("a line name");
    expect("=");
    ConstructionStep step;
    step.kind = ConstructionStep::Kind::kLine;
    step.name = name.text;
    step.loc = name.loc;
    step.line = line_expr();
    define(name, Kind::kLine);
    program_.steps.push_back(std::move(step));
  }

  // point M = hyperbolism(C, x=c)       point M = antihyperbolism(C, x=c)
  //   M__m0 = on_curve(C)                 M__m0 = on_curve(C)
  //   M__d  = vertical(x=c)               M__d  = vertical(x=c)
  //   M__p  = intersect(line_through((0,0), M__m0), M__d)
  //                                       M__q  = intersect(horizontal_through(M__m0), M__d)
  //   M = intersect(vertical_through(M__m0), horizontal_through(M__p))
  //                                       M = intersect(line_through((0,0), M__q), vertical_through(M__m0))
  void parse_macro(const Token& name, bool forward) {
    const Token& head = next();
    expect("(");
    CurveRef curve = curve_ref();
    expect(",");
    expect_keyword("x");
    expect("=");
    ExprAst c = expr();
    expect(")");

    const std::string m0 = name.text + "__m0";
    const std::string d = name.text + "__d";
    const std::string mid = name.text + (forward ? "__p" : "__q");
    for (const auto& n : {m0, d, mid}) {
      Token t = name;
      t.text = n;
      define(t, n == d ? Kind::kLine : Kind::kPoint);
    }
    define(name, Kind::kPoint);
    note_mover(head, m0);

    auto named_point = [](const std::string& n) {
      PointRef r;
      r.name = n;
      return r;
    };
    auto origin = [] {
      PointRef r;
      r.literal.emplace(ExprAst::make_number(Rational(0)), ExprAst::make_number(Rational(0)));
      return r;
    };
    auto inline_line = [](LineExpr::Kind kind, PointRef a, PointRef b = {}) {
      LineRef r;
      LineExpr e;
      e.kind = kind;
      e.a = std::move(a);
      e.b = std::move(b);
      r.inline_expr = std::move(e);
      return r;
    };
    auto named_line = [](const std::string& n) {
      LineRef r;
      r.name = n;
      return r;
    };

    ConstructionStep s0;
    s0.kind = ConstructionStep::Kind::kPoint;
    s0.name = m0;
    s0.loc = name.loc;
    s0.point.kind = PointExpr::Kind::kOnCurve;
    s0.point.curve = std::move(curve);

    ConstructionStep s1;
    s1.kind = ConstructionStep::Kind::kLine;
    s1.name = d;
    s1.loc = name.loc;
    s1.line.kind = LineExpr::Kind::kVertical;
    s1.line.value = std::move(c);

    ConstructionStep s2;
    s2.kind = ConstructionStep::Kind::kPoint;
    s2.name = mid;
    s2.loc = name.loc;
    s2.point.kind = PointExpr::Kind::kIntersect;
    s2.point.first = forward ? inline_line(LineExpr::Kind::kThrough, origin(), named_point(m0))
                             : inline_line(LineExpr::Kind::kHorizontalThrough, named_point(m0));
    s2.point.second = named_line(d);

    ConstructionStep s3;
    s3.kind = ConstructionStep::Kind::kPoint;
    s3.name = name.text;
    s3.loc = name.loc;
    s3.point.kind = PointExpr::Kind::kIntersect;
    if (forward) {
      s3.point.first = inline_line(LineExpr::Kind::kVerticalThrough, named_point(m0));
      s3.point.second = inline_line(LineExpr::Kind::kHorizontalThrough, named_point(mid));
    } else {
      s3.point.first = inline_line(LineExpr::Kind::kThrough, origin(), named_point(mid));
      s3.point.second = inline_line(LineExpr::Kind::kVerticalThrough, named_point(m0));
    }

    program_.steps.push_back(std::move(s0));
    program_.steps.push_back(std::move(s1));
    program_.steps.push_back(std::move(s2));
    program_.steps.push_back(std::move(s3));
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
  std::optional<std::set<std::string>> declared_params_ = std::set<std::string>{};
  std::map<std::string, Kind> names_;
  ConstructionProgram program_;
  bool has_locus_ = false;
};

std::string render_expr(const ExprAst& e) {
  // Round-trippable: parenthesised AST form parses back to the same value.
  return render_ast(e);
}

std::string render_point_ref(const PointRef& p) {
  if (p.literal) return "(" + render_expr(p.literal->first) + ", " + render_expr(p.literal->second) + ")";
  return p.name;
}

std::string render_line(const LineExpr& l) {
  switch (l.kind) {
    case LineExpr::Kind::kVertical: return "vertical(x=" + render_expr(l.value) + ")";
    case LineExpr::Kind::kHorizontal: return "horizontal(y=" + render_expr(l.value) + ")";
    case LineExpr::Kind::kThrough:
      return "line_through(" + render_point_ref(l.a) + ", " + render_point_ref(l.b) + ")";
    case LineExpr::Kind::kVerticalThrough: return "vertical_through(" + render_point_ref(l.a) + ")";
    case LineExpr::Kind::kHorizontalThrough: return "horizontal_through(" + render_point_ref(l.a) + ")";
  }
  return "";
}

std::string render_line_ref(const LineRef& l) {
  return l.inline_expr ? render_line(*l.inline_expr) : l.name;
}

}  // namespace

ConstructionProgram parse_construction(std::string_view text) { return ProgramParser(text).parse(); }

std::string render_construction(const ConstructionProgram& program) {
  std::ostringstream out;
  for (const auto& p : program.params) out << "param " << p << "\n";
  for (const auto& s : program.steps) {
    if (s.kind == ConstructionStep::Kind::kLine) {
      out << "line " << s.name << " = " << render_line(s.line) << "\n";
      continue;
    }
    out << "point " << s.name << " = ";
    switch (s.point.kind) {
      case PointExpr::Kind::kOnCurve: {
        out << "on_curve(" << s.point.curve.name;
        if (!s.point.curve.bindings.empty()) {
          out << "(";
          for (std::size_t i = 0; i < s.point.curve.bindings.size(); ++i) {
            if (i) out << ", ";
            out << s.point.curve.bindings[i].first << "=" << render_expr(s.point.curve.bindings[i].second);
          }
          out << ")";
        }
        out << ")";
        break;
      }
      case PointExpr::Kind::kIntersect:
        out << "intersect(" << render_line_ref(s.point.first) << ", "
            << render_line_ref(s.point.second) << ")";
        break;
      case PointExpr::Kind::kLiteral:
        out << "(" << render_expr(s.point.x) << ", " << render_expr(s.point.y) << ")";
        break;
    }
    out << "\n";
  }
  out << "locus " << program.traced << "\n";
  return out.str();
}

}  // namespace curvelab
