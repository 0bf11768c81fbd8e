#pragma once

#include <string>
#include <string_view>

#include "curvelab/poly/multipoly.hpp"

namespace curvelab {

/// Quotient of two polynomials kept in lowest terms. The denominator has
/// integer coefficients, content 1 and a positive leading coefficient, so
/// equal functions have identical representations.
class RatFunc {
 public:
  RatFunc() : den_(1) {}
  RatFunc(MultiPoly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  RatFunc(const Rational& c) : num_(c), den_(1) {}       // NOLINT(google-explicit-constructor)
  RatFunc(long c) : RatFunc(Rational(c)) {}              // NOLINT(google-explicit-constructor)
  RatFunc(int c) : RatFunc(Rational(c)) {}               // NOLINT(google-explicit-constructor)
  /// Throws kInvalidArgument when den is zero.
  RatFunc(MultiPoly num, MultiPoly den);

  const MultiPoly& numer() const { return num_; }
  const MultiPoly& denom() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_polynomial() const { return den_.is_constant(); }
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  bool depends_on(std::string_view var) const {
    return num_.depends_on(var) || den_.depends_on(var);
  }

  RatFunc operator-() const;
  friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
  friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
  /// Throws kInvalidArgument on division by the zero function.
  friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
  RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
  RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
  RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
  RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }
  friend bool operator==(const RatFunc& a, const RatFunc& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Integer power; negative exponents invert.
  RatFunc pow(int exponent) const;
  RatFunc derivative(std::string_view var) const;
  RatFunc substitute(std::string_view var, const RatFunc& value) const;
  RatFunc substitute(const Assignment& values) const;

  /// Throws kInvalidArgument when the denominator vanishes.
  Rational evaluate(const Assignment& values) const;
  double evaluate_double(const std::map<std::string, double, std::less<>>& values) const;

  /// "num" or "(num)/(den)" in exact rational form.
  std::string to_string() const;

 private:
  static RatFunc unchecked(MultiPoly num, MultiPoly den);

  MultiPoly num_;
  MultiPoly den_;
};

}  // namespace curvelab
