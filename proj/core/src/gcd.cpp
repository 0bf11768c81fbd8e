#include "curvelab/poly/gcd.hpp"

#include <algorithm>

#include "curvelab/error.hpp"

namespace curvelab {

namespace {

bool divides(const Exponents& d, const Exponents& m) {
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (d[i] > m[i]) return false;
  }
  return true;
}

Exponents sub_exponents(const Exponents& m, const Exponents& d) {
  Exponents r{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) r[i] = static_cast<std::uint16_t>(m[i] - d[i]);
  return r;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) r[i] = static_cast<std::uint16_t>(a[i] + b[i]);
  return r;
}

// r := r - coeff * x^shift * d, all term vectors laid out on the same variables.
void subtract_shifted(std::vector<MultiPoly::Term>& r, const std::vector<MultiPoly::Term>& d,
                      const Exponents& shift, const Rational& coeff) {
  std::vector<MultiPoly::Term> out;
  out.reserve(r.size() + d.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < d.size()) {
    if (j == d.size()) {
      out.push_back(std::move(r[i++]));
      continue;
    }
    const Exponents e = add_exponents(d[j].exponents, shift);
    const int c = i == r.size() ? -1 : compare_canonical(r[i].exponents, e);
    if (c > 0) {
      out.push_back(std::move(r[i++]));
    } else if (c < 0) {
      out.push_back(MultiPoly::Term{e, -(coeff * d[j].coeff)});
      ++j;
    } else {
      Rational v = r[i].coeff - coeff * d[j].coeff;
      if (!v.is_zero()) out.push_back(MultiPoly::Term{e, std::move(v)});
      ++i;
      ++j;
    }
  }
  r = std::move(out);
}

MultiPoly leading_coeff_in(const std::vector<MultiPoly>& coeffs) { return coeffs.back(); }

void trim(std::vector<MultiPoly>& c) {
  while (!c.empty() && c.back().is_zero()) c.pop_back();
}

MultiPoly primitive_in(const MultiPoly& p, std::string_view var) {
  return exact_quotient(p, content_in(p, var));
}

MultiPoly subresultant_gcd(MultiPoly a, MultiPoly b, std::string_view var) {
  if (a.degree(var) < b.degree(var)) std::swap(a, b);
  MultiPoly g(1);
  MultiPoly h(1);
  while (true) {
    const int delta = a.degree(var) - b.degree(var);
    MultiPoly r = pseudo_remainder(a, b, var);
    if (r.is_zero()) break;
    if (r.degree(var) == 0) return MultiPoly(1);
    a = std::move(b);
    b = exact_quotient(r, g * h.pow(static_cast<unsigned>(delta)));
    g = a.coefficients_in(var).back();
    if (delta == 1) {
      h = g;
    } else if (delta > 1) {
      h = exact_quotient(g.pow(static_cast<unsigned>(delta)), h.pow(static_cast<unsigned>(delta - 1)));
    }
  }
  return primitive_in(b, var);
}

MultiPoly gcd_nonzero(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_constant() || b.is_constant()) return MultiPoly(1);
  if (are_associates(a, b)) return normalize(a);
  // Pick a variable present in both; otherwise the gcd lives in the contents.
  std::string var;
  for (const auto& v : a.variables()) {
    if (b.depends_on(v)) {
      var = v;
      break;
    }
  }
  if (var.empty()) return MultiPoly(1);
  const MultiPoly ca = content_in(a, var);
  const MultiPoly cb = content_in(b, var);
  const MultiPoly gc = gcd_nonzero(ca, cb);
  const MultiPoly pa = exact_quotient(a, ca);
  const MultiPoly pb = exact_quotient(b, cb);
  return normalize(gc * subresultant_gcd(pa, pb, var));
}

}  // namespace

MultiPoly normalize(const MultiPoly& p) {
  if (p.is_zero()) return p;
  const mpz_class l = p.denominator_lcm();
  const mpz_class c = p.integer_content();
  Rational scale(l, c);
  if (p.leading_coeff().sign() < 0) scale = -scale;
  return p * scale;
}

bool are_associates(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  return p * q.leading_coeff() == q * p.leading_coeff();
}

std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d) {
  if (d.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by the zero polynomial");
  if (p.is_zero()) return MultiPoly();
  if (d.is_constant()) return p * (Rational(1) / d.constant_value());
  for (const auto& v : d.variables()) {
    if (!p.depends_on(v) || p.degree(v) < d.degree(v)) return std::nullopt;
  }
  const auto vars = MultiPoly::merged_variables(p.variables(), d.variables());
  auto r = p.terms_on(vars);
  const auto dt = d.terms_on(vars);
  const auto& lead = dt.front();
  std::vector<MultiPoly::Term> quotient;
  while (!r.empty()) {
    if (!divides(lead.exponents, r.front().exponents)) return std::nullopt;
    const Exponents shift = sub_exponents(r.front().exponents, lead.exponents);
    const Rational c = r.front().coeff / lead.coeff;
    quotient.push_back(MultiPoly::Term{shift, c});
    subtract_shifted(r, dt, shift, c);
  }
  return MultiPoly::from_terms(vars, std::move(quotient));
}

MultiPoly exact_quotient(const MultiPoly& p, const MultiPoly& d) {
  auto q = divide_exact(p, d);
  if (!q) {
    throw Error(ErrorCode::kInvalidArgument,
                "polynomial division is not exact: (" + p.to_string() + ") / (" + d.to_string() + ")");
  }
  return *std::move(q);
}

MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::string_view var) {
  auto r = a.coefficients_in(var);
  const auto bc = b.coefficients_in(var);
  if (bc.empty()) throw Error(ErrorCode::kInvalidArgument, "pseudo-remainder by zero");
  const int db = static_cast<int>(bc.size()) - 1;
  if (static_cast<int>(r.size()) - 1 < db) return a;
  const MultiPoly lcb = leading_coeff_in(bc);
  int e = static_cast<int>(r.size()) - 1 - db + 1;
  while (!r.empty() && static_cast<int>(r.size()) - 1 >= db) {
    const int dr = static_cast<int>(r.size()) - 1;
    const MultiPoly lcr = r.back();
    for (auto& c : r) c = lcb * c;
    for (int i = 0; i <= db; ++i) {
      r[static_cast<std::size_t>(i + dr - db)] -= lcr * bc[static_cast<std::size_t>(i)];
    }
    trim(r);
    --e;
  }
  MultiPoly rem = MultiPoly::from_coefficients(var, r);
  if (e > 0) rem *= lcb.pow(static_cast<unsigned>(e));
  return rem;
}

MultiPoly content_in(const MultiPoly& p, std::string_view var) {
  const auto coeffs = p.coefficients_in(var);
  MultiPoly g;
  for (const auto& c : coeffs) {
    if (c.is_zero()) continue;
    g = g.is_zero() ? normalize(c) : gcd_nonzero(g, c);
    if (g.is_constant()) return MultiPoly(1);
  }
  return g;
}

MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero()) return normalize(q);
  if (q.is_zero()) return normalize(p);
  return gcd_nonzero(normalize(p), normalize(q));
}

ContentPrimitive content_primitive(const MultiPoly& p, const std::vector<std::string>& main_vars) {
  if (p.is_zero()) return {MultiPoly(1), MultiPoly()};
  MultiPoly g;
  for (const auto& [key, coeff] : p.coefficients_in(main_vars)) {
    g = g.is_zero() ? normalize(coeff) : poly_gcd(g, coeff);
    if (g.is_constant()) break;
  }
  const MultiPoly q = exact_quotient(p, g);
  const Rational scale(q.integer_content(), q.denominator_lcm());
  return {g * scale, q * (Rational(1) / scale)};
}

MultiPoly squarefree_part(const MultiPoly& p) {
  if (p.is_zero() || p.is_constant()) return normalize(p);
  MultiPoly g = p;
  for (const auto& v : p.variables()) {
    g = poly_gcd(g, p.derivative(v));
    if (g.is_constant()) break;
  }
  return normalize(exact_quotient(p, g));
}

}  // namespace curvelab
