#include "curvelab/poly/multipoly.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <tuple>

#include "curvelab/error.hpp"

namespace curvelab {

namespace {

int variable_group(std::string_view name) {
  if (name == "x") return 0;
  if (name == "y") return 2;
  if (is_mover_variable(name)) return 3;
  return 1;
}

Exponents add_exponents(const Exponents& a, const Exponents& b) {
  Exponents r{};
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    const unsigned s = unsigned{a[i]} + unsigned{b[i]};
    if (s > 0xFFFFu) throw Error(ErrorCode::kInvalidArgument, "exponent overflow");
    r[i] = static_cast<std::uint16_t>(s);
  }
  return r;
}

bool term_less(const MultiPoly::Term& a, const MultiPoly::Term& b) {
  return compare_canonical(a.exponents, b.exponents) > 0;
}

void append_power(std::ostringstream& out, const std::string& var, unsigned e) {
  out << var;
  if (e > 1) out << '^' << e;
}

}  // namespace

bool is_mover_variable(std::string_view name) { return name == "t" || name == "u"; }

bool variable_precedes(std::string_view a, std::string_view b) {
  return std::make_tuple(variable_group(a), a) < std::make_tuple(variable_group(b), b);
}

std::vector<std::string> sort_variables(std::vector<std::string> names) {
  std::sort(names.begin(), names.end(),
            [](const std::string& a, const std::string& b) { return variable_precedes(a, b); });
  names.erase(std::unique(names.begin(), names.end()), names.end());
  return names;
}

unsigned exponent_sum(const Exponents& e) {
  unsigned s = 0;
  for (auto v : e) s += v;
  return s;
}

int compare_canonical(const Exponents& a, const Exponents& b) {
  const unsigned da = exponent_sum(a);
  const unsigned db = exponent_sum(b);
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = 0; i < kMaxVariables; ++i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

MultiPoly::MultiPoly(const Rational& constant) {
  if (!constant.is_zero()) terms_.push_back(Term{Exponents{}, constant});
}

MultiPoly MultiPoly::variable(std::string_view name) {
  MultiPoly p;
  p.vars_.emplace_back(name);
  Term t;
  t.exponents[0] = 1;
  t.coeff = Rational(1);
  p.terms_.push_back(std::move(t));
  return p;
}

MultiPoly MultiPoly::monomial(const Rational& coeff, const std::map<std::string, unsigned>& powers) {
  std::vector<std::string> vars;
  for (const auto& [name, e] : powers) vars.push_back(name);
  Term t;
  t.coeff = coeff;
  const auto sorted = sort_variables(vars);
  if (sorted.size() > kMaxVariables) {
    throw Error(ErrorCode::kTooManyVariables, "more than 8 variables in one polynomial");
  }
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    const unsigned e = powers.at(sorted[i]);
    if (e > 0xFFFFu) throw Error(ErrorCode::kInvalidArgument, "exponent overflow");
    t.exponents[i] = static_cast<std::uint16_t>(e);
  }
  return from_terms(sorted, {t});
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars, std::vector<Term> terms) {
  MultiPoly p;
  const auto sorted = sort_variables(vars);
  if (sorted.size() > kMaxVariables) {
    throw Error(ErrorCode::kTooManyVariables, "more than 8 variables in one polynomial");
  }
  if (sorted != vars) {
    std::vector<int> where(vars.size());
    for (std::size_t i = 0; i < vars.size(); ++i) {
      where[i] = static_cast<int>(std::find(sorted.begin(), sorted.end(), vars[i]) - sorted.begin());
    }
    for (auto& t : terms) {
      Exponents e{};
      for (std::size_t i = 0; i < vars.size(); ++i) {
        const unsigned s = unsigned{e[where[i]]} + t.exponents[i];
        e[where[i]] = static_cast<std::uint16_t>(s);
      }
      t.exponents = e;
    }
  }
  p.vars_ = sorted;
  p.terms_ = std::move(terms);
  p.canonicalize();
  return p;
}

void MultiPoly::canonicalize() {
  std::sort(terms_.begin(), terms_.end(), term_less);
  std::vector<Term> merged;
  merged.reserve(terms_.size());
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().exponents == t.exponents) {
      merged.back().coeff += t.coeff;
    } else {
      if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coeff.is_zero()) merged.pop_back();
  terms_ = std::move(merged);
  drop_unused_variables();
}

void MultiPoly::drop_unused_variables() {
  std::array<bool, kMaxVariables> used{};
  for (const auto& t : terms_) {
    for (std::size_t i = 0; i < vars_.size(); ++i) used[i] = used[i] || t.exponents[i] != 0;
  }
  if (std::all_of(used.begin(), used.begin() + static_cast<long>(vars_.size()),
                  [](bool b) { return b; })) {
    return;
  }
  std::vector<std::string> kept;
  std::vector<std::size_t> index;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (used[i]) {
      kept.push_back(vars_[i]);
      index.push_back(i);
    }
  }
  for (auto& t : terms_) {
    Exponents e{};
    for (std::size_t k = 0; k < index.size(); ++k) e[k] = t.exponents[index[k]];
    t.exponents = e;
  }
  vars_ = std::move(kept);
  // Removing all-zero columns preserves the relative canonical order.
}

std::vector<std::string> MultiPoly::merged_variables(const std::vector<std::string>& a,
                                                     const std::vector<std::string>& b) {
  if (a == b) return a;
  std::vector<std::string> all = a;
  all.insert(all.end(), b.begin(), b.end());
  auto merged = sort_variables(std::move(all));
  if (merged.size() > kMaxVariables) {
    throw Error(ErrorCode::kTooManyVariables, "more than 8 variables in one polynomial");
  }
  return merged;
}

std::vector<MultiPoly::Term> MultiPoly::terms_on(const std::vector<std::string>& target) const {
  if (target == vars_) return terms_;
  std::vector<std::size_t> where(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    where[i] = static_cast<std::size_t>(std::find(target.begin(), target.end(), vars_[i]) - target.begin());
  }
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Term r;
    r.coeff = t.coeff;
    for (std::size_t i = 0; i < vars_.size(); ++i) r.exponents[where[i]] = t.exponents[i];
    out.push_back(std::move(r));
  }
  // A superset layout keeps the relative canonical order of terms.
  return out;
}

Rational MultiPoly::constant_value() const {
  if (!is_constant()) throw Error(ErrorCode::kInvalidArgument, "polynomial is not constant");
  return terms_.empty() ? Rational(0) : terms_.front().coeff;
}

bool MultiPoly::depends_on(std::string_view var) const { return variable_index(var) >= 0; }

int MultiPoly::variable_index(std::string_view var) const {
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (vars_[i] == var) return static_cast<int>(i);
  }
  return -1;
}

int MultiPoly::total_degree() const {
  if (is_zero()) return kMinusInfinity;
  return static_cast<int>(exponent_sum(terms_.front().exponents));
}

int MultiPoly::degree(std::string_view var) const {
  if (is_zero()) return kMinusInfinity;
  const int i = variable_index(var);
  if (i < 0) return 0;
  int d = 0;
  for (const auto& t : terms_) d = std::max(d, int{t.exponents[static_cast<std::size_t>(i)]});
  return d;
}

int MultiPoly::degree_in(const std::vector<std::string>& vars) const {
  if (is_zero()) return kMinusInfinity;
  std::vector<std::size_t> idx;
  for (const auto& v : vars) {
    const int i = variable_index(v);
    if (i >= 0) idx.push_back(static_cast<std::size_t>(i));
  }
  int d = 0;
  for (const auto& t : terms_) {
    int s = 0;
    for (auto i : idx) s += t.exponents[i];
    d = std::max(d, s);
  }
  return d;
}

unsigned MultiPoly::exponent(const Term& term, std::string_view var) const {
  const int i = variable_index(var);
  return i < 0 ? 0u : term.exponents[static_cast<std::size_t>(i)];
}

std::map<std::string, unsigned> MultiPoly::powers(const Term& term) const {
  std::map<std::string, unsigned> out;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (term.exponents[i] != 0) out[vars_[i]] = term.exponents[i];
  }
  return out;
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coeff = -t.coeff;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const auto vars = merged_variables(vars_, o.vars_);
  auto a = terms_on(vars);
  auto b = o.terms_on(vars);
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && compare_canonical(a[i].exponents, b[j].exponents) > 0)) {
      out.push_back(std::move(a[i++]));
    } else if (i == a.size() || compare_canonical(a[i].exponents, b[j].exponents) < 0) {
      out.push_back(std::move(b[j++]));
    } else {
      Rational c = a[i].coeff + b[j].coeff;
      if (!c.is_zero()) out.push_back(Term{a[i].exponents, std::move(c)});
      ++i;
      ++j;
    }
  }
  vars_ = vars;
  terms_ = std::move(out);
  drop_unused_variables();
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& o) { return *this += -o; }

MultiPoly& MultiPoly::operator*=(const Rational& c) {
  if (c.is_zero()) {
    *this = MultiPoly();
    return *this;
  }
  for (auto& t : terms_) t.coeff *= c;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& o) { return *this = *this * o; }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  if (a.is_zero() || b.is_zero()) return MultiPoly();
  if (b.is_constant()) return a * b.constant_value();
  if (a.is_constant()) return b * a.constant_value();
  const auto vars = MultiPoly::merged_variables(a.vars_, b.vars_);
  const auto ta = a.terms_on(vars);
  const auto tb = b.terms_on(vars);
  std::vector<MultiPoly::Term> prod;
  prod.reserve(ta.size() * tb.size());
  for (const auto& x : ta) {
    for (const auto& y : tb) {
      prod.push_back(MultiPoly::Term{add_exponents(x.exponents, y.exponents), x.coeff * y.coeff});
    }
  }
  MultiPoly r;
  r.vars_ = vars;
  r.terms_ = std::move(prod);
  r.canonicalize();
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.vars_ != b.vars_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (a.terms_[i].exponents != b.terms_[i].exponents || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

MultiPoly MultiPoly::pow(unsigned exponent) const {
  MultiPoly result(1);
  MultiPoly base = *this;
  while (exponent > 0) {
    if (exponent & 1u) result *= base;
    exponent >>= 1u;
    if (exponent > 0) base = base * base;
  }
  return result;
}

MultiPoly MultiPoly::derivative(std::string_view var) const {
  const int i = variable_index(var);
  if (i < 0) return MultiPoly();
  const auto k = static_cast<std::size_t>(i);
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.exponents[k] == 0) continue;
    Term d = t;
    d.coeff *= Rational(static_cast<long>(t.exponents[k]));
    d.exponents[k] = static_cast<std::uint16_t>(t.exponents[k] - 1);
    out.push_back(std::move(d));
  }
  return from_terms(vars_, std::move(out));
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly, std::less<>>& values) const {
  if (is_zero()) return *this;
  std::vector<std::size_t> replaced;
  std::vector<std::string> kept_vars;
  std::vector<std::size_t> kept_idx;
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    if (values.count(vars_[i])) {
      replaced.push_back(i);
    } else {
      kept_vars.push_back(vars_[i]);
      kept_idx.push_back(i);
    }
  }
  if (replaced.empty()) return *this;
  // Cache powers of each replacement.
  std::vector<std::vector<MultiPoly>> powers(replaced.size());
  for (std::size_t r = 0; r < replaced.size(); ++r) {
    const auto& value = values.find(vars_[replaced[r]])->second;
    const int d = degree(vars_[replaced[r]]);
    powers[r].reserve(static_cast<std::size_t>(d) + 1);
    powers[r].push_back(MultiPoly(1));
    for (int e = 1; e <= d; ++e) powers[r].push_back(powers[r].back() * value);
  }
  // Group terms by the exponents of the replaced variables.
  std::map<std::vector<unsigned>, std::vector<Term>> groups;
  for (const auto& t : terms_) {
    std::vector<unsigned> key;
    for (auto i : replaced) key.push_back(t.exponents[i]);
    Term rest;
    rest.coeff = t.coeff;
    for (std::size_t k = 0; k < kept_idx.size(); ++k) rest.exponents[k] = t.exponents[kept_idx[k]];
    groups[key].push_back(std::move(rest));
  }
  MultiPoly result;
  for (auto& [key, rest_terms] : groups) {
    MultiPoly part = from_terms(kept_vars, std::move(rest_terms));
    for (std::size_t r = 0; r < replaced.size(); ++r) part *= powers[r][key[r]];
    result += part;
  }
  return result;
}

MultiPoly MultiPoly::substitute(std::string_view var, const MultiPoly& value) const {
  std::map<std::string, MultiPoly, std::less<>> m;
  m.emplace(std::string(var), value);
  return substitute(m);
}

MultiPoly MultiPoly::substitute(const Assignment& values) const {
  std::map<std::string, MultiPoly, std::less<>> m;
  for (const auto& [k, v] : values) m.emplace(k, MultiPoly(v));
  return substitute(m);
}

MultiPoly MultiPoly::rename(std::string_view from, std::string_view to) const {
  if (!depends_on(from) || from == to) return *this;
  return substitute(from, variable(to));
}

Rational MultiPoly::evaluate(const Assignment& values) const {
  std::vector<Rational> point;
  for (const auto& v : vars_) {
    auto it = values.find(v);
    if (it == values.end()) {
      throw Error(ErrorCode::kMissingVariable, "no value bound for variable '" + v + "'");
    }
    point.push_back(it->second);
  }
  // Cache powers per variable.
  std::vector<std::vector<Rational>> pw(vars_.size());
  for (std::size_t i = 0; i < vars_.size(); ++i) {
    const int d = degree(vars_[i]);
    pw[i].push_back(Rational(1));
    for (int e = 1; e <= d; ++e) pw[i].push_back(pw[i].back() * point[i]);
  }
  Rational sum;
  for (const auto& t : terms_) {
    Rational term = t.coeff;
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.exponents[i]) term *= pw[i][t.exponents[i]];
    }
    sum += term;
  }
  return sum;
}

double MultiPoly::evaluate_double(const std::map<std::string, double, std::less<>>& values) const {
  std::vector<double> point;
  for (const auto& v : vars_) {
    auto it = values.find(v);
    if (it == values.end()) {
      throw Error(ErrorCode::kMissingVariable, "no value bound for variable '" + v + "'");
    }
    point.push_back(it->second);
  }
  double sum = 0.0;
  for (const auto& t : terms_) {
    double term = t.coeff.to_double();
    for (std::size_t i = 0; i < vars_.size(); ++i) {
      if (t.exponents[i]) term *= std::pow(point[i], t.exponents[i]);
    }
    sum += term;
  }
  return sum;
}

std::vector<MultiPoly> MultiPoly::coefficients_in(std::string_view var) const {
  const int d = degree(var);
  if (d == kMinusInfinity) return {};
  std::vector<std::vector<Term>> buckets(static_cast<std::size_t>(d) + 1);
  const int vi = variable_index(var);
  for (const auto& t : terms_) {
    Term r = t;
    unsigned e = 0;
    if (vi >= 0) {
      e = t.exponents[static_cast<std::size_t>(vi)];
      r.exponents[static_cast<std::size_t>(vi)] = 0;
    }
    buckets[e].push_back(std::move(r));
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(from_terms(vars_, std::move(b)));
  return out;
}

MultiPoly MultiPoly::from_coefficients(std::string_view var, const std::vector<MultiPoly>& coeffs) {
  MultiPoly result;
  const MultiPoly v = variable(var);
  MultiPoly power(1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (!coeffs[i].is_zero()) result += coeffs[i] * power;
    if (i + 1 < coeffs.size()) power *= v;
  }
  return result;
}

std::map<std::vector<unsigned>, MultiPoly> MultiPoly::coefficients_in(
    const std::vector<std::string>& main_vars) const {
  std::vector<int> idx;
  for (const auto& v : main_vars) idx.push_back(variable_index(v));
  std::map<std::vector<unsigned>, std::vector<Term>> groups;
  for (const auto& t : terms_) {
    std::vector<unsigned> key;
    Term rest = t;
    for (int i : idx) {
      if (i >= 0) {
        key.push_back(t.exponents[static_cast<std::size_t>(i)]);
        rest.exponents[static_cast<std::size_t>(i)] = 0;
      } else {
        key.push_back(0);
      }
    }
    groups[key].push_back(std::move(rest));
  }
  std::map<std::vector<unsigned>, MultiPoly> out;
  for (auto& [k, ts] : groups) out.emplace(k, from_terms(vars_, std::move(ts)));
  return out;
}

mpz_class MultiPoly::denominator_lcm() const {
  mpz_class l = 1;
  for (const auto& t : terms_) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), t.coeff.den().get_mpz_t());
  return l;
}

mpz_class MultiPoly::integer_content() const {
  const mpz_class l = denominator_lcm();
  mpz_class g = 0;
  for (const auto& t : terms_) {
    const mpz_class n = t.coeff.num() * (l / t.coeff.den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  return g;
}

std::string MultiPoly::to_string() const {
  if (terms_.empty()) return "0";
  // Factors inside a monomial are written alphabetically.
  std::vector<std::size_t> order(vars_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return vars_[a] < vars_[b]; });
  std::ostringstream out;
  bool first = true;
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    if (first) {
      if (c.sign() < 0) out << '-';
    } else {
      out << (c.sign() < 0 ? " - " : " + ");
    }
    c = c.abs();
    const bool constant_term = exponent_sum(t.exponents) == 0;
    bool need_star = false;
    if (!c.is_one() || constant_term) {
      out << c.to_string();
      need_star = true;
    }
    for (const std::size_t i : order) {
      if (t.exponents[i] == 0) continue;
      if (need_star) out << '*';
      append_power(out, vars_[i], t.exponents[i]);
      need_star = true;
    }
    first = false;
  }
  return out.str();
}

}  // namespace curvelab
