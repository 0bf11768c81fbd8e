#pragma once

#include <string>
#include <vector>

#include "curvelab/elim/deadline.hpp"
#include "curvelab/poly/multipoly.hpp"

namespace curvelab {

/// Term order on a ranked list of ring variables (ranking[0] is the largest).
struct MonomialOrder {
  enum class Kind { kLex, kGradedLex, kGradedReverseLex, kBlockElimination };

  Kind kind = Kind::kGradedReverseLex;
  std::vector<std::string> ranking;
  /// For kBlockElimination: the first `block` variables of the ranking are
  /// eliminated. Each block is ordered by graded reverse lex.
  std::size_t block = 0;

  static MonomialOrder lex(std::vector<std::string> ranking);
  static MonomialOrder graded_lex(std::vector<std::string> ranking);
  static MonomialOrder grevlex(std::vector<std::string> ranking);
  static MonomialOrder elimination(std::vector<std::string> eliminate, std::vector<std::string> keep);

  /// <0, 0, >0 comparing exponent vectors laid out on `ranking`.
  int compare(const Exponents& a, const Exponents& b) const;
  std::string name() const;
};

struct Ideal {
  std::vector<MultiPoly> generators;
  /// Ring variables; must cover every variable of the generators.
  std::vector<std::string> ring;
};

/// Remainder of p on division by G (full reduction, every term). Exact over
/// Q: p - remainder lies in the ideal generated by G.
MultiPoly normal_form(const MultiPoly& p, const std::vector<MultiPoly>& G, const MonomialOrder& order,
                      const Deadline& deadline = {});

/// Reduced Gröbner basis, monic in `order`, sorted by decreasing leading
/// monomial. Uses the Gebauer-Möller criteria and the normal selection
/// strategy; checks the deadline at every reduction step.
std::vector<MultiPoly> buchberger(const Ideal& ideal, const MonomialOrder& order,
                                  const Deadline& deadline = {});

/// Generators of I ∩ Q[keep] from a block-order basis eliminating the other
/// ring variables. An empty generator list means the zero ideal.
Ideal elimination_ideal(const Ideal& ideal, const std::vector<std::string>& keep,
                        const Deadline& deadline = {});

/// Leading monomial of p in `order` as a variable -> exponent map.
std::map<std::string, unsigned> leading_monomial(const MultiPoly& p, const MonomialOrder& order);

}  // namespace curvelab
