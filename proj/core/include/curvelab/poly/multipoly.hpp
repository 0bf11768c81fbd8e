#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "curvelab/poly/rational.hpp"

namespace curvelab {

inline constexpr std::size_t kMaxVariables = 8;
inline constexpr int kMinusInfinity = std::numeric_limits<int>::min();

using Exponents = std::array<std::uint16_t, kMaxVariables>;

using Assignment = std::map<std::string, Rational, std::less<>>;

// Variables are ordered by a fixed precedence: x, then parameters
// (alphabetically), then y, then the mover parameters t and u. Graded-lex
// order with this precedence is the canonical term order used for storage,
// equality, "leading term" and printing.
bool variable_precedes(std::string_view a, std::string_view b);
bool is_mover_variable(std::string_view name);
std::vector<std::string> sort_variables(std::vector<std::string> names);

unsigned exponent_sum(const Exponents& e);
/// Canonical comparison of two exponent vectors laid out on the same
/// variable list; returns <0, 0, >0.
int compare_canonical(const Exponents& a, const Exponents& b);

/// Sparse multivariate polynomial with exact rational coefficients.
/// Terms are kept in descending canonical order, without zero coefficients,
/// over exactly the variables that occur.
class MultiPoly {
 public:
  struct Term {
    Exponents exponents{};
    Rational coeff;
  };

  MultiPoly() = default;
  MultiPoly(const Rational& constant);  // NOLINT(google-explicit-constructor)
  MultiPoly(long constant) : MultiPoly(Rational(constant)) {}  // NOLINT
  MultiPoly(int constant) : MultiPoly(Rational(constant)) {}   // NOLINT

  static MultiPoly variable(std::string_view name);
  static MultiPoly monomial(const Rational& coeff,
                            const std::map<std::string, unsigned>& powers);
  /// Builds from arbitrary terms over `vars` (any order, duplicates summed).
  static MultiPoly from_terms(std::vector<std::string> vars, std::vector<Term> terms);

  const std::vector<std::string>& variables() const { return vars_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return vars_.empty(); }
  Rational constant_value() const;  // requires is_constant()
  bool depends_on(std::string_view var) const;
  int variable_index(std::string_view var) const;  // -1 when absent

  /// Total degree; kMinusInfinity for the zero polynomial.
  int total_degree() const;
  /// Degree in one variable; kMinusInfinity for zero.
  int degree(std::string_view var) const;
  /// Total degree counted only over `vars`; kMinusInfinity for zero.
  int degree_in(const std::vector<std::string>& vars) const;
  unsigned exponent(const Term& term, std::string_view var) const;
  std::map<std::string, unsigned> powers(const Term& term) const;

  const Term& leading_term() const { return terms_.front(); }
  const Rational& leading_coeff() const { return terms_.front().coeff; }

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& o);
  MultiPoly& operator-=(const MultiPoly& o);
  MultiPoly& operator*=(const MultiPoly& o);
  MultiPoly& operator*=(const Rational& c);
  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& c) { return a *= c; }
  friend MultiPoly operator*(const Rational& c, MultiPoly a) { return a *= c; }
  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

  MultiPoly pow(unsigned exponent) const;
  MultiPoly derivative(std::string_view var) const;

  /// Replaces variables by polynomials; unlisted variables are kept.
  MultiPoly substitute(const std::map<std::string, MultiPoly, std::less<>>& values) const;
  MultiPoly substitute(std::string_view var, const MultiPoly& value) const;
  MultiPoly substitute(const Assignment& values) const;
  MultiPoly rename(std::string_view from, std::string_view to) const;

  /// Exact value; throws kMissingVariable naming the first unbound variable.
  Rational evaluate(const Assignment& values) const;
  double evaluate_double(const std::map<std::string, double, std::less<>>& values) const;

  /// Coefficients viewed as a univariate polynomial in `var`, index = degree.
  std::vector<MultiPoly> coefficients_in(std::string_view var) const;
  static MultiPoly from_coefficients(std::string_view var,
                                     const std::vector<MultiPoly>& coeffs);
  /// Groups terms by their exponents in `main_vars`; the values are the
  /// coefficient polynomials in the remaining variables.
  std::map<std::vector<unsigned>, MultiPoly> coefficients_in(
      const std::vector<std::string>& main_vars) const;

  /// Least common multiple of all coefficient denominators.
  mpz_class denominator_lcm() const;
  /// Gcd of the numerators of all coefficients (after clearing denominators).
  mpz_class integer_content() const;

  /// Exact text with rational coefficients, e.g. "1/2*x^2 - y + 3".
  std::string to_string() const;

  /// Terms re-laid on `target`, which must be a sorted superset of variables().
  std::vector<Term> terms_on(const std::vector<std::string>& target) const;
  static std::vector<std::string> merged_variables(const std::vector<std::string>& a,
                                                   const std::vector<std::string>& b);

 private:
  void canonicalize();
  void drop_unused_variables();

  std::vector<std::string> vars_;
  std::vector<Term> terms_;
};

}  // namespace curvelab
