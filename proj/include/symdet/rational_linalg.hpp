#pragma once
// Exact linear algebra over the rationals, built on Gauss-Jordan elimination:
// rank, nullspace, linear solving, inversion, and the characteristic
// polynomial (computed fraction-free on a polynomial matrix, so the result is
// exact and monic by construction).

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "symdet/errors.hpp"
#include "symdet/matrix.hpp"
#include "symdet/rational.hpp"
#include "symdet/upoly.hpp"

namespace symdet {

struct ReducedForm {
  RatMatrix mat;                        // reduced row echelon form
  std::vector<std::size_t> pivot_cols;  // ascending; size is the rank
};

inline ReducedForm reduced_row_echelon(RatMatrix m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    m.swap_rows(p, row);
    const Rat inv = Rat(1) / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rat f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

inline std::size_t rank(const RatMatrix& m) {
  return reduced_row_echelon(m).pivot_cols.size();
}

inline std::size_t nullity(const RatMatrix& m) {
  return m.cols() - rank(m);
}

// Basis of the right kernel, one vector per free column in ascending column
// order; the free coordinate itself is set to 1.
inline std::vector<std::vector<Rat>> nullspace_basis(const RatMatrix& m) {
  const ReducedForm rf = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (std::size_t c : rf.pivot_cols) is_pivot[c] = true;

  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[free] = 1;
    for (std::size_t r = 0; r < rf.pivot_cols.size(); ++r)
      v[rf.pivot_cols[r]] = -rf.mat(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

// One solution of A x = b, or nullopt when the system is inconsistent.
inline std::optional<std::vector<Rat>> solve(const RatMatrix& a,
                                             const std::vector<Rat>& b) {
  if (b.size() != a.rows())
    throw input_error("right-hand side length does not match the matrix");
  RatMatrix aug(a.rows(), a.cols() + 1, Rat(0));
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
    aug(i, a.cols()) = b[i];
  }
  const ReducedForm rf = reduced_row_echelon(std::move(aug));
  if (!rf.pivot_cols.empty() && rf.pivot_cols.back() == a.cols())
    return std::nullopt;  // a pivot in the augmented column: 0 = 1
  std::vector<Rat> x(a.cols(), Rat(0));
  for (std::size_t r = 0; r < rf.pivot_cols.size(); ++r)
    x[rf.pivot_cols[r]] = rf.mat(r, a.cols());
  return x;
}

inline RatMatrix identity_matrix(std::size_t n) {
  RatMatrix m(n, n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

inline std::optional<RatMatrix> inverse(const RatMatrix& a) {
  if (a.rows() != a.cols()) throw input_error("inverse of a non-square matrix");
  const std::size_t n = a.rows();
  RatMatrix aug(n, 2 * n, Rat(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = a(i, j);
    aug(i, n + i) = 1;
  }
  const ReducedForm rf = reduced_row_echelon(std::move(aug));
  if (rf.pivot_cols.size() < n || rf.pivot_cols.back() >= n) return std::nullopt;
  RatMatrix inv(n, n, Rat(0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) inv(i, j) = rf.mat(i, n + j);
  return inv;
}

// det(t*I - M) as a monic univariate polynomial, evaluated fraction-free on
// the matrix of linear polynomials in t.
inline UPoly charpoly_exact(const RatMatrix& m) {
  if (m.rows() != m.cols())
    throw input_error("characteristic polynomial of a non-square matrix");
  const std::size_t n = m.rows();
  PolyMatrix p(n, n, MPoly(1));
  const MPoly t = MPoly::variable(1, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      p(i, j) = MPoly::constant(1, -m(i, j));
      if (i == j) p(i, j) += t;
    }
  UPoly cp = UPoly::from_mpoly(det_bareiss(p));
  if (cp.degree() != static_cast<int>(n) || cp.leading() != 1)
    throw internal_inconsistency("characteristic polynomial is not monic of full degree");
  return cp;
}

}  // namespace symdet
