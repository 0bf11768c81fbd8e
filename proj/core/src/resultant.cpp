#include "curvelab/elim/resultant.hpp"

#include <string>

#include "curvelab/error.hpp"
#include "curvelab/poly/gcd.hpp"

namespace curvelab {

PolyMatrix sylvester_matrix(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  const auto pc = p.coefficients_in(var);
  const auto qc = q.coefficients_in(var);
  const std::size_t m = pc.size() - 1;
  const std::size_t n = qc.size() - 1;
  const std::size_t size = m + n;
  PolyMatrix s(size, std::vector<MultiPoly>(size));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = pc[m - k];
  }
  for (std::size_t r = 0; r < m; ++r) {
    for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = qc[n - k];
  }
  return s;
}

MultiPoly bareiss_determinant(PolyMatrix m) {
  const std::size_t n = m.size();
  if (n == 0) return MultiPoly(1);
  bool negate = false;
  MultiPoly prev(1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    // Pivot: the nonzero entry with the fewest terms keeps the products small.
    std::size_t pivot = n;
    for (std::size_t i = k; i < n; ++i) {
      if (m[i][k].is_zero()) continue;
      if (pivot == n || m[i][k].size() < m[pivot][k].size()) pivot = i;
    }
    if (pivot == n) return MultiPoly();
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly v = m[k][k] * m[i][j] - m[i][k] * m[k][j];
        m[i][j] = prev.is_constant() ? v * (Rational(1) / prev.constant_value()) : exact_quotient(v, prev);
      }
      m[i][k] = MultiPoly();
    }
    prev = m[k][k];
  }
  return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

MultiPoly sylvester_resultant(const MultiPoly& p, const MultiPoly& q, std::string_view var) {
  if (p.degree(var) < 1 || q.degree(var) < 1) {
    throw Error(ErrorCode::kInvalidArgument,
                "resultant needs positive degree in '" + std::string(var) + "' for both polynomials");
  }
  return bareiss_determinant(sylvester_matrix(p, q, var));
}

}  // namespace curvelab
