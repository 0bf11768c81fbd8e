#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>

#include "curvelab/error.hpp"
#include "curvelab/poly/upoly.hpp"

namespace curvelab {

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

// Polynomials over Z/p, low degree first, no trailing zeros.
using ModPoly = std::vector<u64>;
using ZPoly = std::vector<mpz_class>;

struct Field {
  u64 p;

  u64 add(u64 a, u64 b) const { return (a + b) % p; }
  u64 sub(u64 a, u64 b) const { return (a + p - b) % p; }
  u64 mul(u64 a, u64 b) const { return static_cast<u64>(static_cast<u128>(a) * b % p); }
  u64 pow(u64 a, u64 e) const {
    u64 r = 1;
    for (; e; e >>= 1, a = mul(a, a)) {
      if (e & 1) r = mul(r, a);
    }
    return r;
  }
  u64 inv(u64 a) const { return pow(a, p - 2); }
  u64 reduce(const mpz_class& z) const {
    mpz_class r = z % mpz_class(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
  }

  static void trim(ModPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  int deg(const ModPoly& a) const { return static_cast<int>(a.size()) - 1; }

  ModPoly sub(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = sub(r[i], b[i]);
    trim(r);
    return r;
  }
  ModPoly add(const ModPoly& a, const ModPoly& b) const {
    ModPoly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] = add(r[i], b[i]);
    trim(r);
    return r;
  }
  ModPoly mul(const ModPoly& a, const ModPoly& b) const {
    if (a.empty() || b.empty()) return {};
    ModPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] == 0) continue;
      for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j]));
    }
    trim(r);
    return r;
  }
  ModPoly scale(ModPoly a, u64 c) const {
    for (auto& v : a) v = mul(v, c);
    trim(a);
    return a;
  }
  ModPoly monic(const ModPoly& a) const { return a.empty() ? a : scale(a, inv(a.back())); }

  void divmod(const ModPoly& a, const ModPoly& b, ModPoly* q, ModPoly* r) const {
    ModPoly rem = a;
    const int db = deg(b);
    const u64 ib = inv(b.back());
    ModPoly quo(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, 0);
    for (int k = deg(rem) - db; k >= 0; --k) {
      const u64 c = mul(rem[k + db], ib);
      quo[k] = c;
      if (c == 0) continue;
      for (int j = 0; j <= db; ++j) rem[k + j] = sub(rem[k + j], mul(c, b[j]));
    }
    rem.resize(std::min<std::size_t>(rem.size(), b.size() - 1));
    trim(rem);
    trim(quo);
    if (q) *q = std::move(quo);
    if (r) *r = std::move(rem);
  }
  ModPoly rem(const ModPoly& a, const ModPoly& b) const {
    ModPoly r;
    divmod(a, b, nullptr, &r);
    return r;
  }
  ModPoly quo(const ModPoly& a, const ModPoly& b) const {
    ModPoly q;
    divmod(a, b, &q, nullptr);
    return q;
  }
  ModPoly gcd(ModPoly a, ModPoly b) const {
    while (!b.empty()) {
      ModPoly r = rem(a, b);
      a = std::move(b);
      b = std::move(r);
    }
    return monic(a);
  }
  // s with s*a = 1 mod m (a, m coprime).
  ModPoly inverse_mod(const ModPoly& a, const ModPoly& m) const {
    ModPoly r0 = m, r1 = rem(a, m), s0, s1{1};
    while (deg(r1) > 0) {
      ModPoly q, r;
      divmod(r0, r1, &q, &r);
      ModPoly s = sub(s0, mul(q, s1));
      r0 = std::move(r1);
      r1 = std::move(r);
      s0 = std::move(s1);
      s1 = std::move(s);
    }
    if (r1.empty()) throw Error(ErrorCode::kInvalidArgument, "modular inverse of a non-unit");
    return rem(scale(s1, inv(r1[0])), m);
  }
  ModPoly powmod(ModPoly base, const mpz_class& e, const ModPoly& m) const {
    ModPoly r{1};
    base = rem(base, m);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
      r = rem(mul(r, r), m);
      if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base), m);
    }
    return r;
  }
  ModPoly derivative(const ModPoly& a) const {
    ModPoly r;
    for (std::size_t i = 1; i < a.size(); ++i) r.push_back(mul(a[i], i % p));
    trim(r);
    return r;
  }
  ModPoly image(const ZPoly& f) const {
    ModPoly r;
    for (const auto& c : f) r.push_back(reduce(c));
    trim(r);
    return r;
  }
};

// Distinct-degree factorization of a monic squarefree polynomial.
std::vector<std::pair<ModPoly, int>> distinct_degree(const Field& F, ModPoly f) {
  std::vector<std::pair<ModPoly, int>> out;
  const ModPoly x{0, 1};
  ModPoly h = x;
  const mpz_class p(static_cast<unsigned long>(F.p));
  for (int d = 1; 2 * d <= F.deg(f); ++d) {
    h = F.powmod(h, p, f);
    const ModPoly g = F.gcd(F.sub(h, x), f);
    if (F.deg(g) > 0) {
      out.emplace_back(g, d);
      f = F.quo(f, g);
      h = F.rem(h, f);
    }
  }
  if (F.deg(f) > 0) out.emplace_back(f, F.deg(f));
  return out;
}

// Splits a product of distinct monic irreducibles of degree d (odd p).
void equal_degree(const Field& F, const ModPoly& g, int d, std::mt19937_64& rng, std::vector<ModPoly>& out) {
  if (F.deg(g) == d) {
    out.push_back(g);
    return;
  }
  mpz_class e;
  mpz_ui_pow_ui(e.get_mpz_t(), F.p, d);
  e = (e - 1) / 2;
  std::uniform_int_distribution<u64> coeff(0, F.p - 1);
  for (;;) {
    ModPoly a(F.deg(g), 0);
    for (auto& c : a) c = coeff(rng);
    Field::trim(a);
    if (F.deg(a) < 1) continue;
    ModPoly b = F.powmod(a, e, g);
    b = F.sub(b, ModPoly{1});
    const ModPoly h = F.gcd(b, g);
    if (F.deg(h) > 0 && F.deg(h) < F.deg(g)) {
      equal_degree(F, h, d, rng, out);
      equal_degree(F, F.quo(g, h), d, rng, out);
      return;
    }
  }
}

std::vector<ModPoly> factor_mod_p(const Field& F, const ModPoly& monic_f, std::mt19937_64& rng) {
  std::vector<ModPoly> out;
  for (const auto& [g, d] : distinct_degree(F, monic_f)) equal_degree(F, g, d, rng, out);
  return out;
}

bool is_probable_prime(u64 n) { return mpz_probab_prime_p(mpz_class(static_cast<unsigned long>(n)).get_mpz_t(), 25) > 0; }

ZPoly to_z(const UPoly& p) {
  ZPoly r;
  for (const auto& c : p.coeffs()) r.push_back(c.num());
  return r;
}

UPoly from_z(const ZPoly& z) {
  std::vector<Rational> c;
  for (const auto& v : z) c.emplace_back(v);
  return UPoly(std::move(c));
}

ZPoly zmul(const ZPoly& a, const ZPoly& b) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return r;
}

void symmetric_mod(ZPoly& a, const mpz_class& m) {
  const mpz_class half = m / 2;
  for (auto& c : a) {
    c %= m;
    if (c < 0) c += m;
    if (c > half) c -= m;
  }
}

// Hensel-lifts monic modular factors of f (f = lc * prod mod p) until the
// modulus exceeds `bound`. Linear lifting, one power of p per step.
std::vector<ZPoly> hensel_lift(const Field& F, const ZPoly& f, const std::vector<ModPoly>& factors,
                               const mpz_class& bound, mpz_class& modulus) {
  const std::size_t r = factors.size();
  const u64 lc_inv = F.inv(F.reduce(f.back()));
  // Partial-fraction cofactors: sum s_i * prod_{j != i} g_j = 1 mod p.
  std::vector<ModPoly> s(r);
  for (std::size_t i = 0; i < r; ++i) {
    ModPoly others{1};
    for (std::size_t j = 0; j < r; ++j) {
      if (j != i) others = F.mul(others, factors[j]);
    }
    s[i] = F.inverse_mod(F.rem(others, factors[i]), factors[i]);
  }
  std::vector<ZPoly> lifted;
  for (const auto& g : factors) {
    ZPoly z;
    for (u64 c : g) z.emplace_back(static_cast<unsigned long>(c));
    lifted.push_back(std::move(z));
  }
  const mpz_class p(static_cast<unsigned long>(F.p));
  modulus = p;
  while (modulus <= bound) {
    ZPoly prod{f.back()};
    for (const auto& g : lifted) prod = zmul(prod, g);
    ZPoly err(f.size(), 0);
    for (std::size_t i = 0; i < f.size(); ++i) err[i] = f[i] - (i < prod.size() ? prod[i] : mpz_class(0));
    ModPoly e;
    for (auto& c : err) {
      c /= modulus;  // exact
      e.push_back(F.mul(F.reduce(c), lc_inv));
    }
    Field::trim(e);
    if (!e.empty()) {
      for (std::size_t i = 0; i < r; ++i) {
        const ModPoly delta = F.rem(F.mul(s[i], e), factors[i]);
        for (std::size_t k = 0; k < delta.size(); ++k) lifted[i][k] += modulus * static_cast<unsigned long>(delta[k]);
      }
    }
    modulus *= p;
  }
  for (auto& g : lifted) symmetric_mod(g, modulus);
  return lifted;
}

std::optional<ZPoly> divide_z(const ZPoly& a, const ZPoly& b) {
  if (a.size() < b.size()) return std::nullopt;
  ZPoly rem = a;
  ZPoly q(a.size() - b.size() + 1, 0);
  for (std::size_t k = q.size(); k-- > 0;) {
    const mpz_class& top = rem[k + b.size() - 1];
    if (top % b.back() != 0) return std::nullopt;
    q[k] = top / b.back();
    for (std::size_t j = 0; j < b.size(); ++j) rem[k + j] -= q[k] * b[j];
  }
  for (const auto& c : rem) {
    if (c != 0) return std::nullopt;
  }
  return q;
}

ZPoly z_primitive(ZPoly a) {
  mpz_class g = 0;
  for (const auto& c : a) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (a.back() < 0) g = -g;
  for (auto& c : a) c /= g;
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

// f primitive, squarefree, positive leading coefficient, degree >= 1.
std::vector<ZPoly> factor_squarefree(ZPoly f) {
  std::vector<ZPoly> out;
  if (f[0] == 0) {
    out.push_back(ZPoly{0, 1});
    f.erase(f.begin());
  }
  if (f.size() <= 2) {
    if (f.size() == 2) out.push_back(f);
    return out;
  }
  std::mt19937_64 rng(0x5eed);

  // Among the first few good primes keep the one with the fewest factors.
  std::optional<Field> best;
  std::vector<ModPoly> best_factors;
  int good = 0;
  for (u64 p = 3; good < 5; p += 2) {
    if (!is_probable_prime(p)) continue;
    const Field F{p};
    if (F.reduce(f.back()) == 0) continue;
    const ModPoly fp = F.monic(F.image(f));
    if (F.deg(F.gcd(fp, F.derivative(fp))) > 0) continue;
    ++good;
    auto factors = factor_mod_p(F, fp, rng);
    if (!best || factors.size() < best_factors.size()) {
      best = F;
      best_factors = std::move(factors);
    }
    if (best_factors.size() == 1) break;
  }
  if (best_factors.size() == 1) {
    out.push_back(f);
    return out;
  }

  // Coefficients of lc(f)/lc(g) * g for any factor g stay below lc * 2^n * |f|_2.
  mpz_class norm2 = 0;
  for (const auto& c : f) norm2 += c * c;
  mpz_class norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  mpz_class bound = 2 * abs(f.back()) * norm;
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), f.size() - 1);

  mpz_class modulus;
  std::vector<ZPoly> lifted = hensel_lift(*best, f, best_factors, bound, modulus);

  // Subset recombination, smallest subsets first.
  std::size_t s = 1;
  while (2 * s <= lifted.size()) {
    bool found = false;
    std::vector<std::size_t> idx(s);
    for (std::size_t i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      ZPoly g{f.back()};
      for (std::size_t i : idx) g = zmul(g, lifted[i]);
      symmetric_mod(g, modulus);
      g = z_primitive(g);
      if (auto q = divide_z(f, g)) {
        out.push_back(g);
        f = *q;
        for (std::size_t k = s; k-- > 0;) lifted.erase(lifted.begin() + static_cast<long>(idx[k]));
        found = true;
        break;
      }
      // Next combination in lexicographic order.
      std::size_t k = s;
      bool advanced = false;
      while (k > 0) {
        --k;
        if (idx[k] != lifted.size() - s + k) {
          advanced = true;
          break;
        }
      }
      if (!advanced) break;
      ++idx[k];
      for (std::size_t j = k + 1; j < s; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (f.size() > 1) out.push_back(z_primitive(f));
  return out;
}

}  // namespace

UFactorization factor_over_q(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kInvalidArgument, "cannot factor the zero polynomial");
  UFactorization result;
  const UPoly prim = p.primitive();
  result.unit = p.leading() / prim.leading();
  if (prim.degree() == 0) return result;

  // Yun's squarefree decomposition.
  UPoly b = gcd(prim, prim.derivative());
  UPoly c = divmod(prim, b).first;
  UPoly d = divmod(prim.derivative(), b).first - c.derivative();
  for (int mult = 1; c.degree() > 0; ++mult) {
    const UPoly a = gcd(c, d);
    if (a.degree() > 0) {
      for (auto& z : factor_squarefree(to_z(a.primitive()))) result.factors.push_back({from_z(z), mult});
    }
    c = divmod(c, a).first;
    d = divmod(d, a).first - c.derivative();
  }
  std::sort(result.factors.begin(), result.factors.end(), [](const UFactor& x, const UFactor& y) {
    if (x.factor.degree() != y.factor.degree()) return x.factor.degree() < y.factor.degree();
    const auto& a = x.factor.coeffs();
    const auto& b = y.factor.coeffs();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  // The unit absorbs what the primitive factors do not account for.
  UPoly product(Rational(1));
  for (const auto& f : result.factors) {
    for (int k = 0; k < f.multiplicity; ++k) product = product * f.factor;
  }
  result.unit = p.leading() / product.leading();
  return result;
}

}  // namespace curvelab
