#include "curvelab/param/ratfunc.hpp"

#include "curvelab/error.hpp"
#include "curvelab/poly/gcd.hpp"

namespace curvelab {

namespace {

// Scale num/den so that den is normalized; den must be nonzero.
void normalize_denominator(MultiPoly& num, MultiPoly& den) {
  const MultiPoly nd = normalize(den);
  const Rational scale = nd.leading_coeff() / den.leading_coeff();
  if (!scale.is_one()) num *= scale;
  den = nd;
}

}  // namespace

RatFunc::RatFunc(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw Error(ErrorCode::kInvalidArgument, "rational function with zero denominator");
  if (num_.is_zero()) {
    den_ = MultiPoly(1);
    return;
  }
  if (!den_.is_constant()) {
    const MultiPoly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = exact_quotient(num_, g);
      den_ = exact_quotient(den_, g);
    }
  }
  normalize_denominator(num_, den_);
}

RatFunc RatFunc::unchecked(MultiPoly num, MultiPoly den) {
  RatFunc r;
  r.num_ = std::move(num);
  r.den_ = std::move(den);
  return r;
}

RatFunc RatFunc::operator-() const { return unchecked(-num_, den_); }

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
  if (a.den_ == b.den_) return RatFunc(a.num_ + b.num_, a.den_);
  if (b.is_polynomial()) return RatFunc(a.num_ + b.num_ * a.den_ * (Rational(1) / b.den_.constant_value()), a.den_);
  if (a.is_polynomial()) return b + a;
  return RatFunc(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
  if (a.is_zero() || b.is_zero()) return RatFunc();
  if (a.is_polynomial() && b.is_polynomial()) {
    return RatFunc::unchecked(a.num_ * b.num_, MultiPoly(1));
  }
  // Cross-cancel first to keep the gcd in the constructor small.
  const MultiPoly g1 = poly_gcd(a.num_, b.den_);
  const MultiPoly g2 = poly_gcd(b.num_, a.den_);
  return RatFunc(exact_quotient(a.num_, g1) * exact_quotient(b.num_, g2),
                 exact_quotient(a.den_, g2) * exact_quotient(b.den_, g1));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
  if (b.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by the zero rational function");
  return a * RatFunc(b.den_, b.num_);
}

RatFunc RatFunc::pow(int exponent) const {
  if (exponent < 0) {
    if (is_zero()) throw Error(ErrorCode::kInvalidArgument, "negative power of zero");
    return RatFunc(den_, num_).pow(-exponent);
  }
  const auto e = static_cast<unsigned>(exponent);
  // Powers of coprime polynomials stay coprime.
  return unchecked(num_.pow(e), den_.pow(e));
}

RatFunc RatFunc::derivative(std::string_view var) const {
  if (is_polynomial()) return RatFunc(num_.derivative(var), den_);
  return RatFunc(num_.derivative(var) * den_ - num_ * den_.derivative(var), den_ * den_);
}

RatFunc RatFunc::substitute(std::string_view var, const RatFunc& value) const {
  if (!depends_on(var)) return *this;
  auto horner = [&](const MultiPoly& p) {
    const auto coeffs = p.coefficients_in(var);
    RatFunc acc;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * value + RatFunc(*it);
    return acc;
  };
  return horner(num_) / horner(den_);
}

RatFunc RatFunc::substitute(const Assignment& values) const {
  return RatFunc(num_.substitute(values), den_.substitute(values));
}

Rational RatFunc::evaluate(const Assignment& values) const {
  const Rational d = den_.evaluate(values);
  if (d.is_zero()) throw Error(ErrorCode::kInvalidArgument, "denominator vanishes at the evaluation point");
  return num_.evaluate(values) / d;
}

double RatFunc::evaluate_double(const std::map<std::string, double, std::less<>>& values) const {
  return num_.evaluate_double(values) / den_.evaluate_double(values);
}

std::string RatFunc::to_string() const {
  if (is_polynomial()) return (num_ * (Rational(1) / den_.constant_value())).to_string();
  return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace curvelab
