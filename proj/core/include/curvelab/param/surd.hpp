#pragma once

#include <string>
#include <string_view>

#include "curvelab/param/ratfunc.hpp"

namespace curvelab {

/// a + b*sqrt(g) with a, b rational functions and a polynomial radicand g.
/// A zero radicand marks a plain rational function (b is then zero). All
/// operands of an arithmetic operation must share one radicand; g is assumed
/// not to be a perfect square.
class SurdFunc {
 public:
  SurdFunc() = default;
  SurdFunc(RatFunc a) : a_(std::move(a)) {}  // NOLINT(google-explicit-constructor)
  SurdFunc(MultiPoly p) : a_(std::move(p)) {}  // NOLINT(google-explicit-constructor)
  SurdFunc(long c) : a_(c) {}                  // NOLINT(google-explicit-constructor)
  SurdFunc(int c) : a_(c) {}                   // NOLINT(google-explicit-constructor)
  SurdFunc(RatFunc a, RatFunc b, MultiPoly radicand);

  /// sqrt(r) written as sqrt(num*den)/den.
  static SurdFunc sqrt_of(const RatFunc& r);

  const RatFunc& rational_part() const { return a_; }
  const RatFunc& surd_part() const { return b_; }
  const MultiPoly& radicand() const { return g_; }
  bool is_rational() const { return b_.is_zero(); }
  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool depends_on(std::string_view var) const;

  SurdFunc conjugate() const;
  /// a^2 - b^2 g, the product with the conjugate.
  RatFunc norm() const;

  SurdFunc operator-() const;
  friend SurdFunc operator+(const SurdFunc& x, const SurdFunc& y);
  friend SurdFunc operator-(const SurdFunc& x, const SurdFunc& y);
  friend SurdFunc operator*(const SurdFunc& x, const SurdFunc& y);
  /// Throws kInvalidArgument when the divisor is identically zero.
  friend SurdFunc operator/(const SurdFunc& x, const SurdFunc& y);
  friend bool operator==(const SurdFunc& x, const SurdFunc& y) {
    return x.a_ == y.a_ && x.b_ == y.b_ && x.g_ == y.g_;
  }

  SurdFunc derivative(std::string_view var) const;
  SurdFunc substitute(const Assignment& values) const;
  /// NaN when the radicand is negative at the point.
  double evaluate_double(const std::map<std::string, double, std::less<>>& values) const;

  std::string to_string() const;

 private:
  static MultiPoly common_radicand(const SurdFunc& x, const SurdFunc& y);

  RatFunc a_;
  RatFunc b_;
  MultiPoly g_;
};

}  // namespace curvelab
