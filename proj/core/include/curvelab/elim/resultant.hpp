#pragma once

#include <string_view>
#include <vector>

#include "curvelab/poly/multipoly.hpp"

namespace curvelab {

using PolyMatrix = std::vector<std::vector<MultiPoly>>;

/// Sylvester matrix of p and q in var (rows: deg q shifts of p, then deg p
/// shifts of q; columns: descending powers of var).
PolyMatrix sylvester_matrix(const MultiPoly& p, const MultiPoly& q, std::string_view var);

/// Determinant by fraction-free Bareiss elimination with row pivoting.
MultiPoly bareiss_determinant(PolyMatrix m);

/// Res_var(p, q) as the determinant of the Sylvester matrix. Throws
/// kInvalidArgument unless both have positive degree in var.
MultiPoly sylvester_resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var);

}  // namespace curvelab
