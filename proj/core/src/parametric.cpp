#include "curvelab/param/parametric.hpp"

#include <algorithm>
#include <set>

#include "curvelab/error.hpp"
#include "curvelab/poly/gcd.hpp"

namespace curvelab {

namespace {

void collect(const MultiPoly& p, std::set<std::string>& out) {
  for (const auto& v : p.variables()) out.insert(v);
}

void collect(const RatFunc& r, std::set<std::string>& out) {
  collect(r.numer(), out);
  collect(r.denom(), out);
}

void collect(const SurdFunc& s, std::set<std::string>& out) {
  collect(s.rational_part(), out);
  collect(s.surd_part(), out);
  collect(s.radicand(), out);
}

int integer_exponent(const ExprAst& node, const MultiPoly& e) {
  if (!e.is_constant() || !e.constant_value().is_integer() || e.constant_value().abs() > Rational(4096)) {
    throw Error(ErrorCode::kNonPolynomial,
                "exponent must be an integer constant in '" + render_ast(node) + "'",
                SourceLocation{node.offset, 0, 0});
  }
  return static_cast<int>(e.constant_value().num().get_si());
}

// Element p0 + p1*w of Q[...][w]/(w^2 - g).
struct Quad {
  MultiPoly p0;
  MultiPoly p1;
};

Quad mul(const Quad& a, const Quad& b, const MultiPoly& g) {
  Quad r;
  r.p0 = a.p0 * b.p0;
  if (!a.p1.is_zero() && !b.p1.is_zero()) r.p0 += a.p1 * b.p1 * g;
  if (!a.p1.is_zero()) r.p1 += a.p1 * b.p0;
  if (!b.p1.is_zero()) r.p1 += a.p0 * b.p1;
  return r;
}

Quad scale(const Quad& a, const MultiPoly& c) { return Quad{a.p0 * c, a.p1 * c}; }

// value = (num.p0 + num.p1*sqrt(g)) / den with polynomial parts.
struct Homogeneous {
  Quad num;
  MultiPoly den;
};

Homogeneous split(const SurdFunc& s) {
  const RatFunc& a = s.rational_part();
  const RatFunc& b = s.surd_part();
  if (s.is_rational()) return {Quad{a.numer(), MultiPoly()}, a.denom()};
  const MultiPoly g = poly_gcd(a.denom(), b.denom());
  const MultiPoly ca = exact_quotient(b.denom(), g);
  const MultiPoly cb = exact_quotient(a.denom(), g);
  return {Quad{a.numer() * ca, b.numer() * cb}, a.denom() * ca};
}

std::vector<MultiPoly> powers(const MultiPoly& p, int n) {
  std::vector<MultiPoly> out{MultiPoly(1)};
  for (int i = 1; i <= n; ++i) out.push_back(out.back() * p);
  return out;
}

std::vector<Quad> powers(const Quad& q, int n, const MultiPoly& g) {
  std::vector<Quad> out{Quad{MultiPoly(1), MultiPoly()}};
  for (int i = 1; i <= n; ++i) out.push_back(mul(out.back(), q, g));
  return out;
}

}  // namespace

ParametricPoint::ParametricPoint(SurdFunc px, SurdFunc py, std::string param)
    : x(std::move(px)), y(std::move(py)), parameter(std::move(param)) {
  exclude_poles();
}

std::vector<std::string> ParametricPoint::symbols() const {
  std::set<std::string> vars;
  collect(x, vars);
  collect(y, vars);
  vars.erase(parameter);
  return sort_variables({vars.begin(), vars.end()});
}

void ParametricPoint::exclude(const MultiPoly& p) {
  if (p.is_zero() || !p.depends_on(parameter)) return;
  const MultiPoly sf = squarefree_part(p);
  for (const auto& e : excluded) {
    if (are_associates(e, sf)) return;
  }
  excluded.push_back(sf);
}

void ParametricPoint::exclude_poles() {
  for (const SurdFunc* c : {&x, &y}) {
    exclude(c->rational_part().denom());
    exclude(c->surd_part().denom());
  }
}

std::optional<std::pair<RatFunc, RatFunc>> ParametricPoint::limit_at_infinity() const {
  if (!is_rational()) return std::nullopt;
  auto limit = [&](const RatFunc& r) -> std::optional<RatFunc> {
    const int dn = r.numer().degree(parameter);
    const int dd = r.denom().degree(parameter);
    if (dn > dd) return std::nullopt;
    if (dn < dd) return RatFunc();
    return RatFunc(r.numer().coefficients_in(parameter).back(), r.denom().coefficients_in(parameter).back());
  };
  auto lx = limit(x.rational_part());
  auto ly = limit(y.rational_part());
  if (!lx || !ly) return std::nullopt;
  return std::make_pair(*std::move(lx), *std::move(ly));
}

ParametricPoint ParametricPoint::bind(const Assignment& values) const {
  Assignment params;
  for (const auto& [k, v] : values) {
    if (k != parameter) params.emplace(k, v);
  }
  ParametricPoint out(x.substitute(params), y.substitute(params), parameter);
  for (const auto& e : excluded) out.exclude(e.substitute(params));
  out.notes = notes;
  return out;
}

RatFunc weierstrass_substitute(const ExprAst& ast, std::string_view trig_var, std::string_view new_var) {
  using K = ExprAst::Kind;
  const MultiPoly u = MultiPoly::variable(new_var);
  const MultiPoly one(1);
  switch (ast.kind) {
    case K::kNumber: return RatFunc(ast.number);
    case K::kVariable:
      if (ast.name == trig_var) {
        throw Error(ErrorCode::kUnsupportedFunction,
                    "'" + std::string(trig_var) + "' may only appear inside cos, sin or tan",
                    SourceLocation{ast.offset, 0, 0});
      }
      return RatFunc(MultiPoly::variable(ast.name));
    case K::kAdd:
      return weierstrass_substitute(ast.children[0], trig_var, new_var) +
             weierstrass_substitute(ast.children[1], trig_var, new_var);
    case K::kSub:
      return weierstrass_substitute(ast.children[0], trig_var, new_var) -
             weierstrass_substitute(ast.children[1], trig_var, new_var);
    case K::kMul:
      return weierstrass_substitute(ast.children[0], trig_var, new_var) *
             weierstrass_substitute(ast.children[1], trig_var, new_var);
    case K::kDiv:
      return weierstrass_substitute(ast.children[0], trig_var, new_var) /
             weierstrass_substitute(ast.children[1], trig_var, new_var);
    case K::kNeg: return -weierstrass_substitute(ast.children[0], trig_var, new_var);
    case K::kPow: {
      const int e = integer_exponent(ast, ast_to_poly(ast.children[1]));
      return weierstrass_substitute(ast.children[0], trig_var, new_var).pow(e);
    }
    case K::kCall: {
      const ExprAst& arg = ast.children[0];
      if (arg.kind != K::kVariable || arg.name != trig_var || ast.name == "sqrt") {
        throw Error(ErrorCode::kUnsupportedFunction,
                    "unsupported call '" + render_ast(ast) + "': only cos, sin and tan of '" +
                        std::string(trig_var) + "' are accepted",
                    SourceLocation{ast.offset, 0, 0});
      }
      const MultiPoly u2 = u * u;
      if (ast.name == "cos") return RatFunc(one - u2, one + u2);
      if (ast.name == "sin") return RatFunc(MultiPoly(2) * u, one + u2);
      return RatFunc(MultiPoly(2) * u, one - u2);
    }
  }
  throw Error(ErrorCode::kUnsupportedFunction, "unsupported expression node");
}

RatFunc ast_to_ratfunc(const ExprAst& ast) {
  const SurdFunc s = ast_to_surd(ast);
  if (!s.is_rational()) {
    throw Error(ErrorCode::kUnsupportedFunction, "square root in a rational expression",
                SourceLocation{ast.offset, 0, 0});
  }
  return s.rational_part();
}

SurdFunc ast_to_surd(const ExprAst& ast) {
  using K = ExprAst::Kind;
  switch (ast.kind) {
    case K::kNumber: return SurdFunc(RatFunc(ast.number));
    case K::kVariable: return SurdFunc(MultiPoly::variable(ast.name));
    case K::kAdd: return ast_to_surd(ast.children[0]) + ast_to_surd(ast.children[1]);
    case K::kSub: return ast_to_surd(ast.children[0]) - ast_to_surd(ast.children[1]);
    case K::kMul: return ast_to_surd(ast.children[0]) * ast_to_surd(ast.children[1]);
    case K::kDiv: return ast_to_surd(ast.children[0]) / ast_to_surd(ast.children[1]);
    case K::kNeg: return -ast_to_surd(ast.children[0]);
    case K::kPow: {
      const int e = integer_exponent(ast, ast_to_poly(ast.children[1]));
      const SurdFunc base = ast_to_surd(ast.children[0]);
      SurdFunc acc(1);
      for (int i = 0; i < std::abs(e); ++i) acc = acc * base;
      return e < 0 ? SurdFunc(1) / acc : acc;
    }
    case K::kCall: {
      if (ast.name != "sqrt") {
        throw Error(ErrorCode::kUnsupportedFunction,
                    "trigonometric call '" + render_ast(ast) + "' in a rational parametrization",
                    SourceLocation{ast.offset, 0, 0});
      }
      const SurdFunc arg = ast_to_surd(ast.children[0]);
      if (!arg.is_rational()) {
        throw Error(ErrorCode::kMultipleSqrt, "nested square roots are not supported",
                    SourceLocation{ast.offset, 0, 0});
      }
      return SurdFunc::sqrt_of(arg.rational_part());
    }
  }
  throw Error(ErrorCode::kUnsupportedFunction, "unsupported expression node");
}

MultiPoly desquare(std::string_view var, const SurdFunc& value) {
  const RatFunc v(MultiPoly::variable(var));
  if (value.is_rational()) {
    const RatFunc& r = value.rational_part();
    return v.numer() * r.denom() - r.numer();
  }
  const RatFunc d = v - value.rational_part();
  const RatFunc e = d * d - value.surd_part() * value.surd_part() * RatFunc(value.radicand());
  return normalize(e.numer());
}

std::pair<MultiPoly, MultiPoly> clear_to_system(const ParametricPoint& point) {
  MultiPoly p1 = desquare("x", point.x);
  if (point.x.is_rational() || point.y.is_rational()) return {std::move(p1), desquare("y", point.y)};
  // Both coordinates carry sqrt(g): (x - ax) / bx = (y - ay) / by.
  const RatFunc xv(MultiPoly::variable("x"));
  const RatFunc yv(MultiPoly::variable("y"));
  const RatFunc link = point.x.surd_part() * (yv - point.y.rational_part()) -
                       point.y.surd_part() * (xv - point.x.rational_part());
  return {std::move(p1), normalize(link.numer())};
}

bool verify_on_curve(const MultiPoly& F, const ParametricPoint& point) {
  if (F.is_zero()) return true;
  MultiPoly g = point.x.radicand();
  if (g.is_zero()) g = point.y.radicand();
  if (!point.y.radicand().is_zero() && !(point.y.radicand() == g)) {
    throw Error(ErrorCode::kMultipleSqrt, "coordinates use different square roots");
  }
  const Homogeneous hx = split(point.x);
  const Homogeneous hy = split(point.y);
  const int m = std::max(F.degree("x"), 0);
  const int n = std::max(F.degree("y"), 0);
  const auto xn = powers(hx.num, m, g);
  const auto xd = powers(hx.den, m);
  const auto yn = powers(hy.num, n, g);
  const auto yd = powers(hy.den, n);

  Quad total;
  const auto by_y = F.coefficients_in("y");
  for (int j = 0; j < static_cast<int>(by_y.size()); ++j) {
    if (by_y[static_cast<std::size_t>(j)].is_zero()) continue;
    const auto by_x = by_y[static_cast<std::size_t>(j)].coefficients_in("x");
    Quad inner;
    for (int i = 0; i < static_cast<int>(by_x.size()); ++i) {
      const MultiPoly& c = by_x[static_cast<std::size_t>(i)];
      if (c.is_zero()) continue;
      const Quad t = scale(xn[static_cast<std::size_t>(i)], c * xd[static_cast<std::size_t>(m - i)]);
      inner.p0 += t.p0;
      inner.p1 += t.p1;
    }
    const Quad t = scale(mul(inner, yn[static_cast<std::size_t>(j)], g), yd[static_cast<std::size_t>(n - j)]);
    total.p0 += t.p0;
    total.p1 += t.p1;
  }
  return total.p0.is_zero() && total.p1.is_zero();
}

}  // namespace curvelab
