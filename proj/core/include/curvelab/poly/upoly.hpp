#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "curvelab/poly/multipoly.hpp"
#include "curvelab/poly/rational.hpp"

namespace curvelab {

/// Dense univariate polynomial over Q; coeffs[i] multiplies x^i and the
/// leading coefficient is nonzero (the zero polynomial has no coefficients).
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<Rational> coeffs);
  UPoly(const Rational& c);  // NOLINT(google-explicit-constructor)

  static UPoly x();
  /// Throws kInvalidArgument when p involves any variable other than var.
  static UPoly from_multipoly(const MultiPoly& p, std::string_view var);
  MultiPoly to_multipoly(std::string_view var) const;

  const std::vector<Rational>& coeffs() const { return c_; }
  bool is_zero() const { return c_.empty(); }
  /// kMinusInfinity for zero.
  int degree() const { return c_.empty() ? kMinusInfinity : static_cast<int>(c_.size()) - 1; }
  const Rational& leading() const { return c_.back(); }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(); }

  UPoly operator-() const;
  friend UPoly operator+(const UPoly& a, const UPoly& b);
  friend UPoly operator-(const UPoly& a, const UPoly& b);
  friend UPoly operator*(const UPoly& a, const UPoly& b);
  friend UPoly operator*(UPoly a, const Rational& c);
  friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

  UPoly monic() const;
  UPoly derivative() const;
  Rational evaluate(const Rational& at) const;
  double evaluate_double(double at) const;
  int sign_at(const Rational& at) const { return evaluate(at).sign(); }
  /// Integer coefficients with content 1 and positive leading coefficient.
  UPoly primitive() const;
  std::string to_string(std::string_view var = "x") const;

 private:
  void trim();
  std::vector<Rational> c_;
};

/// Quotient and remainder of a by nonzero b.
std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
/// Monic gcd; gcd(0, 0) = 0.
UPoly gcd(const UPoly& a, const UPoly& b);
/// Product of the distinct irreducible factors, monic.
UPoly squarefree_part(const UPoly& p);

/// Sturm chain p, p', -rem(p, p'), ... (p nonzero).
std::vector<UPoly> sturm_sequence(const UPoly& p);
/// Distinct real roots in the half-open interval (lo, hi].
int count_real_roots(const std::vector<UPoly>& sturm, const Rational& lo, const Rational& hi);
/// All roots lie strictly inside (-B, B).
Rational cauchy_bound(const UPoly& p);

/// A real root: exact when lo == hi, otherwise the unique root in the open
/// interval (lo, hi).
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / Rational(2); }
};

/// Isolates the distinct real roots of p in increasing order with rational
/// endpoints; intervals are refined until narrower than `width`.
std::vector<RootInterval> isolate_real_roots(const UPoly& p, const Rational& width = Rational(1, 1024));

/// Distinct rational roots in increasing order (read off the linear
/// factors of the factorization over Q).
std::vector<Rational> rational_roots(const UPoly& p);

struct UFactor {
  UPoly factor;  // primitive integer polynomial, positive leading coefficient
  int multiplicity = 1;
};

struct UFactorization {
  Rational unit;
  std::vector<UFactor> factors;  // sorted by degree, then coefficients
};

/// Complete factorization over Q: p = unit * prod(factor^multiplicity).
/// Factors modulo a small prime (distinct-degree, then Cantor-Zassenhaus),
/// lifts with Hensel and recombines subsets by trial division.
UFactorization factor_over_q(const UPoly& p);

}  // namespace curvelab
