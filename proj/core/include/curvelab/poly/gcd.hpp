#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "curvelab/poly/multipoly.hpp"

namespace curvelab {

/// Scales p to integer coefficients with content 1 and a positive leading
/// coefficient (canonical order). Zero stays zero.
MultiPoly normalize(const MultiPoly& p);

/// True when p and q differ by a nonzero rational factor.
bool are_associates(const MultiPoly& p, const MultiPoly& q);

/// q such that p = q * d, or nullopt when d does not divide p.
std::optional<MultiPoly> divide_exact(const MultiPoly& p, const MultiPoly& d);
/// Like divide_exact but throws kInvalidArgument when the division is not exact.
MultiPoly exact_quotient(const MultiPoly& p, const MultiPoly& d);

/// lc_var(b)^(deg a - deg b + 1) * a  mod  b, viewing both in var.
MultiPoly pseudo_remainder(const MultiPoly& a, const MultiPoly& b, std::string_view var);

/// Greatest common divisor over Q, returned normalized (integer coefficients,
/// content 1, positive leading coefficient). gcd(p, 0) = normalize(p).
MultiPoly poly_gcd(const MultiPoly& p, const MultiPoly& q);

struct ContentPrimitive {
  MultiPoly content;
  MultiPoly primitive;
};

/// p = content * primitive where content is the gcd of the coefficients of p
/// seen as a polynomial in main_vars (with positive integer content) and the
/// primitive part has coprime integer coefficients.
ContentPrimitive content_primitive(const MultiPoly& p, const std::vector<std::string>& main_vars);

/// Gcd of the coefficients of p viewed in var (a polynomial free of var).
MultiPoly content_in(const MultiPoly& p, std::string_view var);

/// Product of the distinct irreducible factors of p, normalized.
MultiPoly squarefree_part(const MultiPoly& p);

}  // namespace curvelab
