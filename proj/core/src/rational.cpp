#include "curvelab/poly/rational.hpp"

#include <cmath>

#include "curvelab/error.hpp"

namespace curvelab {

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw Error(ErrorCode::kInvalidArgument, "rational with zero denominator");
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorCode::kSyntax, "empty number");
  const auto dot = s.find('.');
  if (dot != std::string::npos) {
    std::string digits = s.substr(0, dot) + s.substr(dot + 1);
    const std::size_t frac = s.size() - dot - 1;
    mpz_class num;
    if (digits.empty() || digits == "-" || num.set_str(digits, 10) != 0) {
      throw Error(ErrorCode::kSyntax, "malformed decimal '" + s + "'");
    }
    return Rational(num, integer_pow(mpz_class(10), static_cast<unsigned>(frac)));
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0 || q.get_den() == 0) {
    throw Error(ErrorCode::kSyntax, "malformed rational '" + s + "'");
  }
  return Rational(q);
}

Rational Rational::from_double(double value) {
  if (!std::isfinite(value)) throw Error(ErrorCode::kInvalidArgument, "non-finite value");
  return Rational(mpq_class(value));
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorCode::kInvalidArgument, "division by zero");
  value_ /= o.value_;
  return *this;
}

Rational Rational::pow(unsigned exponent) const {
  mpz_class n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), exponent);
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), exponent);
  return Rational(n, d);
}

mpz_class integer_pow(const mpz_class& base, unsigned exponent) {
  mpz_class r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), exponent);
  return r;
}

}  // namespace curvelab
