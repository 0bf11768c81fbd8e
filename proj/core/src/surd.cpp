#include "curvelab/param/surd.hpp"

#include <cmath>

#include "curvelab/error.hpp"

namespace curvelab {

SurdFunc::SurdFunc(RatFunc a, RatFunc b, MultiPoly radicand)
    : a_(std::move(a)), b_(std::move(b)), g_(std::move(radicand)) {
  if (g_.is_zero()) b_ = RatFunc();
  if (g_.is_constant() && !g_.is_zero()) {
    // sqrt of a rational constant only stays symbolic when it is irrational.
    const Rational c = g_.constant_value();
    if (c.sign() > 0 && mpz_perfect_square_p(c.num().get_mpz_t()) &&
        mpz_perfect_square_p(c.den().get_mpz_t())) {
      const Rational root(mpz_class(sqrt(c.num())), mpz_class(sqrt(c.den())));
      a_ = a_ + b_ * RatFunc(root);
      b_ = RatFunc();
    }
  }
  if (b_.is_zero()) g_ = MultiPoly();
}

SurdFunc SurdFunc::sqrt_of(const RatFunc& r) {
  if (r.is_zero()) return SurdFunc();
  return SurdFunc(RatFunc(), RatFunc(MultiPoly(1), r.denom()), r.numer() * r.denom());
}

bool SurdFunc::depends_on(std::string_view var) const {
  return a_.depends_on(var) || b_.depends_on(var) || g_.depends_on(var);
}

MultiPoly SurdFunc::common_radicand(const SurdFunc& x, const SurdFunc& y) {
  if (x.g_.is_zero()) return y.g_;
  if (y.g_.is_zero() || x.g_ == y.g_) return x.g_;
  throw Error(ErrorCode::kMultipleSqrt,
              "expressions with two different square roots (sqrt(" + x.g_.to_string() + ") and sqrt(" +
                  y.g_.to_string() + ")) are not supported");
}

SurdFunc SurdFunc::conjugate() const { return SurdFunc(a_, -b_, g_); }

RatFunc SurdFunc::norm() const {
  if (is_rational()) return a_ * a_;
  return a_ * a_ - b_ * b_ * RatFunc(g_);
}

SurdFunc SurdFunc::operator-() const { return SurdFunc(-a_, -b_, g_); }

SurdFunc operator+(const SurdFunc& x, const SurdFunc& y) {
  const MultiPoly g = SurdFunc::common_radicand(x, y);
  return SurdFunc(x.a_ + y.a_, x.b_ + y.b_, g);
}

SurdFunc operator-(const SurdFunc& x, const SurdFunc& y) { return x + (-y); }

SurdFunc operator*(const SurdFunc& x, const SurdFunc& y) {
  const MultiPoly g = SurdFunc::common_radicand(x, y);
  if (g.is_zero()) return SurdFunc(x.a_ * y.a_);
  return SurdFunc(x.a_ * y.a_ + x.b_ * y.b_ * RatFunc(g), x.a_ * y.b_ + x.b_ * y.a_, g);
}

SurdFunc operator/(const SurdFunc& x, const SurdFunc& y) {
  if (y.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by an identically zero expression");
  if (y.is_rational()) return SurdFunc(x.a_ / y.a_, x.b_ / y.a_, x.g_);
  const RatFunc n = y.norm();
  if (n.is_zero()) throw Error(ErrorCode::kInvalidArgument, "radicand is a perfect square: " + y.g_.to_string());
  const SurdFunc num = x * y.conjugate();
  return SurdFunc(num.a_ / n, num.b_ / n, num.g_);
}

SurdFunc SurdFunc::derivative(std::string_view var) const {
  if (is_rational()) return SurdFunc(a_.derivative(var));
  // (b sqrt g)' = b' sqrt g + b g' / (2 sqrt g) = (b' + b g' / (2 g)) sqrt g
  const RatFunc g(g_);
  return SurdFunc(a_.derivative(var), b_.derivative(var) + b_ * RatFunc(g_.derivative(var)) / (RatFunc(2) * g), g_);
}

SurdFunc SurdFunc::substitute(const Assignment& values) const {
  return SurdFunc(a_.substitute(values), b_.substitute(values), g_.substitute(values));
}

double SurdFunc::evaluate_double(const std::map<std::string, double, std::less<>>& values) const {
  const double a = a_.evaluate_double(values);
  if (is_rational()) return a;
  const double g = g_.evaluate_double(values);
  if (g < 0) return std::nan("");
  return a + b_.evaluate_double(values) * std::sqrt(g);
}

std::string SurdFunc::to_string() const {
  if (is_rational()) return a_.to_string();
  std::string out;
  if (!a_.is_zero()) out = a_.to_string() + " + ";
  return out + "(" + b_.to_string() + ")*sqrt(" + g_.to_string() + ")";
}

}  // namespace curvelab
