#include "curvelab/poly/upoly.hpp"

#include <algorithm>
#include <cmath>

#include "curvelab/error.hpp"

namespace curvelab {

UPoly::UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UPoly::UPoly(const Rational& c) {
  if (!c.is_zero()) c_.push_back(c);
}

void UPoly::trim() {
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

UPoly UPoly::x() { return UPoly(std::vector<Rational>{0, 1}); }

UPoly UPoly::from_multipoly(const MultiPoly& p, std::string_view var) {
  for (const auto& v : p.variables()) {
    if (v != var) {
      throw Error(ErrorCode::kInvalidArgument,
                  "expected a polynomial in " + std::string(var) + " only, found " + v);
    }
  }
  std::vector<Rational> c;
  if (p.is_constant()) return UPoly(p.is_zero() ? Rational() : p.constant_value());
  for (const auto& t : p.terms()) {
    const unsigned e = t.exponents[0];
    if (c.size() <= e) c.resize(e + 1);
    c[e] += t.coeff;
  }
  return UPoly(std::move(c));
}

MultiPoly UPoly::to_multipoly(std::string_view var) const {
  std::vector<MultiPoly> coeffs(c_.begin(), c_.end());
  return MultiPoly::from_coefficients(var, coeffs);
}

UPoly UPoly::operator-() const {
  UPoly r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

UPoly operator+(const UPoly& a, const UPoly& b) {
  std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return UPoly(std::move(c));
}

UPoly operator-(const UPoly& a, const UPoly& b) { return a + (-b); }

UPoly operator*(const UPoly& a, const UPoly& b) {
  if (a.is_zero() || b.is_zero()) return UPoly();
  std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return UPoly(std::move(c));
}

UPoly operator*(UPoly a, const Rational& c) {
  for (auto& x : a.c_) x *= c;
  a.trim();
  return a;
}

UPoly UPoly::monic() const {
  if (is_zero()) return *this;
  return *this * (Rational(1) / leading());
}

UPoly UPoly::derivative() const {
  if (c_.size() <= 1) return UPoly();
  std::vector<Rational> c(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
  return UPoly(std::move(c));
}

Rational UPoly::evaluate(const Rational& at) const {
  Rational r;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + *it;
  return r;
}

double UPoly::evaluate_double(double at) const {
  double r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * at + it->to_double();
  return r;
}

UPoly UPoly::primitive() const {
  if (is_zero()) return *this;
  mpz_class lcm = 1, g = 0;
  for (const auto& c : c_) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.den().get_mpz_t());
  std::vector<mpz_class> ints;
  for (const auto& c : c_) {
    ints.push_back(c.num() * (lcm / c.den()));
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (c_.back().sign() < 0) g = -g;
  std::vector<Rational> out;
  for (const auto& v : ints) out.emplace_back(mpz_class(v / g));
  return UPoly(std::move(out));
}

std::string UPoly::to_string(std::string_view var) const {
  return to_multipoly(var).to_string();
}

std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
  if (b.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by the zero polynomial");
  if (a.degree() < b.degree()) return {UPoly(), a};
  std::vector<Rational> r = a.coeffs();
  const auto& d = b.coeffs();
  const std::size_t n = d.size();
  std::vector<Rational> q(r.size() - n + 1);
  const Rational inv = Rational(1) / b.leading();
  for (std::size_t k = q.size(); k-- > 0;) {
    const Rational c = r[k + n - 1] * inv;
    q[k] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j < n; ++j) r[k + j] -= c * d[j];
  }
  r.resize(n - 1);
  return {UPoly(std::move(q)), UPoly(std::move(r))};
}

UPoly gcd(const UPoly& a, const UPoly& b) {
  UPoly x = a.primitive(), y = b.primitive();
  while (!y.is_zero()) {
    UPoly r = divmod(x, y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

UPoly squarefree_part(const UPoly& p) {
  if (p.degree() <= 0) return p.is_zero() ? p : UPoly(Rational(1));
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

std::vector<UPoly> sturm_sequence(const UPoly& p) {
  std::vector<UPoly> seq{p, p.derivative()};
  while (!seq.back().is_zero()) {
    // Positive rescaling keeps the sign pattern and the coefficients small.
    UPoly r = -divmod(seq[seq.size() - 2], seq.back()).second;
    if (!r.is_zero()) {
      const UPoly prim = r.primitive();
      r = prim * Rational(r.leading().sign() == prim.leading().sign() ? 1 : -1);
    }
    seq.push_back(std::move(r));
  }
  seq.pop_back();
  return seq;
}

namespace {

int sign_changes(const std::vector<UPoly>& sturm, const Rational& at) {
  int changes = 0, last = 0;
  for (const auto& s : sturm) {
    const int v = s.sign_at(at);
    if (v == 0) continue;
    if (last != 0 && v != last) ++changes;
    last = v;
  }
  return changes;
}

}  // namespace

int count_real_roots(const std::vector<UPoly>& sturm, const Rational& lo, const Rational& hi) {
  return sign_changes(sturm, lo) - sign_changes(sturm, hi);
}

Rational cauchy_bound(const UPoly& p) {
  Rational m;
  for (std::size_t i = 0; i + 1 < p.coeffs().size(); ++i) {
    const Rational r = (p.coeffs()[i] / p.leading()).abs();
    if (r > m) m = r;
  }
  return m + Rational(1);
}

std::vector<RootInterval> isolate_real_roots(const UPoly& p, const Rational& width) {
  if (p.is_zero()) throw Error(ErrorCode::kInvalidArgument, "the zero polynomial has every number as a root");
  const UPoly sf = squarefree_part(p);
  std::vector<RootInterval> out;
  if (sf.degree() < 1) return out;
  const auto sturm = sturm_sequence(sf);
  const Rational bound = cauchy_bound(sf);

  // Bisection on (lo, hi] intervals; an exact hit at a midpoint is split off.
  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> stack{{-bound, bound, count_real_roots(sturm, -bound, bound)}};
  while (!stack.empty()) {
    Pending cur = stack.back();
    stack.pop_back();
    if (cur.count == 0) continue;
    if (cur.count == 1) {
      Rational lo = cur.lo, hi = cur.hi;
      if (sf.sign_at(hi) == 0) {
        out.push_back({hi, hi});
        continue;
      }
      while (hi - lo >= width) {
        const Rational mid = (lo + hi) / Rational(2);
        const int s = sf.sign_at(mid);
        if (s == 0) {
          lo = hi = mid;
          break;
        }
        if (s == sf.sign_at(hi)) hi = mid; else lo = mid;
      }
      out.push_back({lo, hi});
      continue;
    }
    const Rational mid = (cur.lo + cur.hi) / Rational(2);
    const int left = count_real_roots(sturm, cur.lo, mid);
    stack.push_back({mid, cur.hi, cur.count - left});
    stack.push_back({cur.lo, mid, left});
  }
  std::sort(out.begin(), out.end(), [](const RootInterval& a, const RootInterval& b) { return a.lo < b.lo; });
  return out;
}

std::vector<Rational> rational_roots(const UPoly& p) {
  if (p.is_zero()) throw Error(ErrorCode::kInvalidArgument, "the zero polynomial has every number as a root");
  std::vector<Rational> roots;
  for (const auto& f : factor_over_q(p).factors) {
    if (f.factor.degree() == 1) roots.push_back(-f.factor.coeffs()[0] / f.factor.coeffs()[1]);
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace curvelab
