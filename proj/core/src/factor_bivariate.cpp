#include <algorithm>
#include <random>
#include <set>

#include "curvelab/analysis/factor.hpp"
#include "curvelab/error.hpp"
#include "curvelab/poly/gcd.hpp"
#include "curvelab/poly/upoly.hpp"

namespace curvelab {

namespace {

constexpr int kSpecializationAttempts = 64;

// Truncated power series in z whose coefficients are polynomials in x.
using Series = std::vector<UPoly>;

Series series_mul(const Series& a, const Series& b, std::size_t n) {
  Series r(n);
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (a[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.size() && i + j < n; ++j) {
      if (!b[j].is_zero()) r[i + j] = r[i + j] + a[i] * b[j];
    }
  }
  return r;
}

// s with s*a = 1 mod m, for coprime a and m.
UPoly inverse_mod(const UPoly& a, const UPoly& m) {
  UPoly r0 = m, r1 = divmod(a, m).second;
  UPoly s0, s1(Rational(1));
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    UPoly s = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s);
  }
  if (r0.degree() != 0) throw Error(ErrorCode::kInvalidArgument, "inverse_mod: factors are not coprime");
  return divmod(s0 * (Rational(1) / r0.leading()), m).second;
}

MultiPoly univariate_to_poly(const UPoly& p, std::string_view var) { return p.to_multipoly(var); }

std::vector<PolyFactor> factor_univariate(const MultiPoly& p, std::string_view var) {
  std::vector<PolyFactor> out;
  if (p.is_constant()) return out;
  for (const auto& f : factor_over_q(UPoly::from_multipoly(p, var)).factors) {
    out.push_back({normalize(univariate_to_poly(f.factor, var)), f.multiplicity});
  }
  return out;
}

MultiPoly from_series(const Series& s) {
  MultiPoly out;
  const MultiPoly z = MultiPoly::variable("y");
  MultiPoly zk(1);
  for (const auto& c : s) {
    if (!c.is_zero()) out += c.to_multipoly("x") * zk;
    zk *= z;
  }
  return out;
}

// Lifts monic factors g of m[0] to factors of the monic series m in Q[x][[z]].
std::vector<Series> hensel_lift(const Series& m, const std::vector<UPoly>& g) {
  const std::size_t n = m.size();
  const std::size_t r = g.size();
  std::vector<UPoly> cofactor_inverse(r);
  for (std::size_t i = 0; i < r; ++i) {
    UPoly others(Rational(1));
    for (std::size_t j = 0; j < r; ++j) {
      if (j != i) others = others * g[j];
    }
    cofactor_inverse[i] = inverse_mod(others, g[i]);
  }
  std::vector<Series> lifted(r, Series(n));
  for (std::size_t i = 0; i < r; ++i) lifted[i][0] = g[i];
  for (std::size_t k = 1; k < n; ++k) {
    Series prod{UPoly(Rational(1))};
    for (const auto& f : lifted) prod = series_mul(prod, f, k + 1);
    const UPoly error = m[k] - (k < prod.size() ? prod[k] : UPoly());
    if (error.is_zero()) continue;
    for (std::size_t i = 0; i < r; ++i) lifted[i][k] = divmod(error * cofactor_inverse[i], g[i]).second;
  }
  return lifted;
}

bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  const std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

// Irreducible factors of a squarefree S in x and y, primitive with respect
// to x and of positive degree in both variables.
std::vector<MultiPoly> factor_squarefree(const MultiPoly& S) {
  const int n = S.degree("x");
  const int dz = S.degree("y");
  const MultiPoly lc_x = S.coefficients_in("x")[n];
  const MultiPoly y = MultiPoly::variable("y");

  std::optional<Rational> y0;
  UPoly f0;
  for (int i = 0; i < kSpecializationAttempts && !y0; ++i) {
    const Rational c((i + 1) / 2 * (i % 2 ? 1 : -1));
    if (!lc_x.evaluate({{"y", c}}).sign()) continue;
    f0 = UPoly::from_multipoly(S.substitute("y", MultiPoly(c)), "x");
    if (gcd(f0, f0.derivative()).degree() > 0) continue;
    y0 = c;
  }
  if (!y0) {
    throw Error(ErrorCode::kUnluckySpecialization,
                "no specialization y = y0 keeps " + S.to_string() + " square-free of the same degree in x");
  }

  const UFactorization image = factor_over_q(f0);
  if (image.factors.size() == 1) return {S};

  const MultiPoly shifted = S.substitute("y", y + MultiPoly(*y0));
  const std::size_t N = static_cast<std::size_t>(dz) + 1;
  Series s(N);
  const auto zc = shifted.coefficients_in("y");
  for (std::size_t k = 0; k < zc.size(); ++k) s[k] = UPoly::from_multipoly(zc[k], "x");

  // Make the series monic in x: multiply by the inverse of its leading coefficient.
  std::vector<Rational> l(N), linv(N);
  for (std::size_t k = 0; k < N; ++k) l[k] = s[k].coeff(n);
  linv[0] = Rational(1) / l[0];
  for (std::size_t k = 1; k < N; ++k) {
    Rational acc;
    for (std::size_t j = 1; j <= k; ++j) acc += l[j] * linv[k - j];
    linv[k] = -acc / l[0];
  }
  Series m(N);
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; i + j < N; ++j) {
      if (!s[i].is_zero() && !linv[j].is_zero()) m[i + j] = m[i + j] + s[i] * linv[j];
    }
  }

  std::vector<UPoly> g;
  for (const auto& f : image.factors) g.push_back(f.factor.monic());
  const std::vector<Series> lifted = hensel_lift(m, g);

  std::vector<std::size_t> active(g.size());
  for (std::size_t i = 0; i < active.size(); ++i) active[i] = i;
  MultiPoly remaining = shifted;
  std::vector<MultiPoly> found;
  std::size_t size = 1;
  while (2 * size <= active.size()) {
    const auto lc_rem = remaining.coefficients_in("x").back().coefficients_in("y");
    Series lc_series(N);
    for (std::size_t k = 0; k < lc_rem.size() && k < N; ++k) {
      if (!lc_rem[k].is_zero()) lc_series[k] = UPoly(lc_rem[k].constant_value());
    }
    bool hit = false;
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    do {
      Series cand = lc_series;
      for (std::size_t i : pick) cand = series_mul(cand, lifted[active[i]], N);
      const MultiPoly candidate = content_primitive(from_series(cand), {"x"}).primitive;
      if (candidate.degree("x") < 1) continue;
      if (auto q = divide_exact(remaining, candidate)) {
        found.push_back(candidate);
        remaining = std::move(*q);
        for (std::size_t i = size; i-- > 0;) active.erase(active.begin() + static_cast<std::ptrdiff_t>(pick[i]));
        hit = true;
        break;
      }
    } while (next_combination(pick, active.size()));
    if (!hit) ++size;
  }
  if (remaining.degree("x") > 0) found.push_back(remaining);

  const MultiPoly back = y - MultiPoly(*y0);
  for (auto& f : found) f = normalize(f.substitute("y", back));
  return found;
}

void check_bivariate(const MultiPoly& F) {
  for (const auto& v : F.variables()) {
    if (v != "x" && v != "y") {
      throw Error(ErrorCode::kInvalidArgument,
                  "factor_bivariate needs a polynomial in x and y only; bind '" + v + "' first");
    }
  }
  if (F.is_zero()) throw Error(ErrorCode::kInvalidArgument, "cannot factor the zero polynomial");
}

void sort_factors(std::vector<PolyFactor>& factors) {
  std::sort(factors.begin(), factors.end(), [](const PolyFactor& a, const PolyFactor& b) {
    if (a.factor.total_degree() != b.factor.total_degree()) return a.factor.total_degree() < b.factor.total_degree();
    return a.factor.to_string() < b.factor.to_string();
  });
}

}  // namespace

MultiPoly FactorizationResult::product() const {
  MultiPoly p(unit);
  for (const auto& f : factors) p *= f.factor.pow(static_cast<unsigned>(f.multiplicity));
  return p;
}

int FactorizationResult::count() const {
  int n = 0;
  for (const auto& f : factors) n += f.multiplicity;
  return n;
}

FactorizationResult factor_bivariate(const MultiPoly& F) {
  check_bivariate(F);
  FactorizationResult result;
  MultiPoly rest = normalize(F);

  if (!rest.depends_on("x")) {
    result.factors = factor_univariate(rest, "y");
    rest = MultiPoly(1);
  } else {
    const MultiPoly cont = content_in(rest, "x");
    if (!cont.is_constant()) {
      result.factors = factor_univariate(cont, "y");
      rest = exact_quotient(rest, cont);
    }
  }

  if (!rest.is_constant() && !rest.depends_on("y")) {
    for (auto& f : factor_univariate(rest, "x")) result.factors.push_back(std::move(f));
  } else if (!rest.is_constant()) {
    for (const auto& g : factor_squarefree(squarefree_part(rest))) {
      PolyFactor pf{g, 0};
      while (auto q = divide_exact(rest, g)) {
        rest = std::move(*q);
        ++pf.multiplicity;
      }
      result.factors.push_back(std::move(pf));
    }
  }
  sort_factors(result.factors);
  MultiPoly prod(1);
  for (const auto& f : result.factors) prod *= f.factor.pow(static_cast<unsigned>(f.multiplicity));
  result.unit = F.leading_coeff() / prod.leading_coeff();
  return result;
}

const char* irreducibility_name(Irreducibility v) {
  switch (v) {
    case Irreducibility::kIrreducible: return "irreducible";
    case Irreducibility::kReducible: return "reducible";
    case Irreducibility::kReducibleAtSpecialization: return "reducible at specialization";
  }
  return "?";
}

std::string IrreducibilityVerdict::summary() const {
  std::string s = irreducibility_name(verdict);
  if (verdict == Irreducibility::kIrreducible) {
    s += exact ? " (exact)" : " (probabilistic, trials=" + std::to_string(trials) + ")";
    return s;
  }
  if (!witness_point.empty()) {
    std::string at;
    for (const auto& [k, v] : witness_point) at += (at.empty() ? "" : ", ") + k + "=" + v.to_string();
    s += " " + at;
  }
  std::string fs;
  for (const auto& f : witness) {
    fs += (fs.empty() ? "" : " * ") + ("(" + f.factor.to_string() + ")");
    if (f.multiplicity > 1) fs += "^" + std::to_string(f.multiplicity);
  }
  return s + ": " + fs;
}

IrreducibilityVerdict irreducible_over_rationals(const MultiPoly& F, const IrreducibilityOptions& options) {
  if (F.is_zero()) throw Error(ErrorCode::kInvalidArgument, "the zero polynomial has no irreducibility verdict");
  const std::vector<std::string> xy{"x", "y"};
  const ContentPrimitive cp = content_primitive(F, xy);
  const MultiPoly& G = cp.primitive;
  const int degree = G.degree_in(xy);
  if (degree < 1) throw Error(ErrorCode::kInvalidArgument, "polynomial has degree 0 in x and y");

  IrreducibilityVerdict out;
  out.parameter_content = cp.content;
  std::vector<std::string> params;
  for (const auto& v : G.variables()) {
    if (v != "x" && v != "y") params.push_back(v);
  }

  if (params.empty()) {
    const FactorizationResult fr = factor_bivariate(G);
    out.witness = fr.factors;
    out.verdict = fr.count() == 1 ? Irreducibility::kIrreducible : Irreducibility::kReducible;
    return out;
  }

  out.exact = false;
  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<long> num(-9, 9), den(1, 6);
  const int dx = G.degree("x"), dy = G.degree("y");
  int attempts = 0;
  while (out.trials < options.trials) {
    if (++attempts > kSpecializationAttempts * std::max(options.trials, 1)) break;
    Assignment at;
    for (const auto& p : params) {
      long a = 0;
      while (a == 0) a = num(rng);
      at[p] = Rational(a) / Rational(den(rng));
    }
    const MultiPoly S = G.substitute(at);
    if (S.degree_in(xy) != degree || S.degree("x") != dx || S.degree("y") != dy) continue;
    ++out.trials;
    const FactorizationResult fr = factor_bivariate(S);
    if (fr.count() > 1) {
      out.verdict = Irreducibility::kReducibleAtSpecialization;
      out.witness_point = at;
      out.witness = fr.factors;
      return out;
    }
  }
  if (out.trials == 0) {
    throw Error(ErrorCode::kDegenerateSpecialization,
                "every sampled specialization lowers the degree of " + G.to_string());
  }
  return out;
}

}  // namespace curvelab
