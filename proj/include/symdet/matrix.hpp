#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "symdet/errors.hpp"
#include "symdet/mpoly.hpp"
#include "symdet/rational.hpp"

namespace symdet {

template <typename T>
class Matrix {
 public:
  Matrix(std::uint32_t rows, std::uint32_t cols, const T& fill)
      : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols, fill) {}

  std::uint32_t rows() const { return rows_; }
  std::uint32_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }

  T& at(std::uint32_t i, std::uint32_t j) {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  const T& at(std::uint32_t i, std::uint32_t j) const {
    return data_[static_cast<std::size_t>(i) * cols_ + j];
  }
  T& operator()(std::uint32_t i, std::uint32_t j) { return at(i, j); }
  const T& operator()(std::uint32_t i, std::uint32_t j) const { return at(i, j); }

  Matrix transpose() const {
    if (data_.empty()) throw input_error("transpose of an empty matrix");
    Matrix out(cols_, rows_, data_[0]);
    for (std::uint32_t i = 0; i < rows_; ++i)
      for (std::uint32_t j = 0; j < cols_; ++j) out.at(j, i) = at(i, j);
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  void swap_rows(std::uint32_t a, std::uint32_t b) {
    for (std::uint32_t j = 0; j < cols_; ++j) std::swap(at(a, j), at(b, j));
  }

 private:
  std::uint32_t rows_, cols_;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<MPoly>;
using RatMatrix = Matrix<Rat>;

// The ring operations det_bareiss needs, keyed on the entry type. `zero`/`one`
// take an exemplar entry because MPoly constants carry an arity.
template <typename T>
struct RingOps;

template <>
struct RingOps<Rat> {
  static Rat zero(const Rat&) { return Rat(0); }
  static Rat one(const Rat&) { return Rat(1); }
  static bool is_zero(const Rat& v) { return v == 0; }
  static Rat exact_div(const Rat& a, const Rat& b) {
    if (b == 0) throw inexact_division("division by zero");
    return a / b;
  }
};

template <>
struct RingOps<MPoly> {
  static MPoly zero(const MPoly& ex) { return MPoly(ex.arity()); }
  static MPoly one(const MPoly& ex) { return MPoly::constant(ex.arity(), Rat(1)); }
  static bool is_zero(const MPoly& v) { return v.is_zero(); }
  static MPoly exact_div(const MPoly& a, const MPoly& b) { return exact_divide(a, b); }
};

/* One-step fraction-free elimination (Bareiss). Every division is exact over
 * the entry ring, so the result is the true determinant with no coefficient
 * blowup from rational functions. Pivoting takes the first row with a nonzero
 * entry in the pivot column; an all-zero pivot column short-circuits to 0. */
template <typename T>
T det_bareiss(Matrix<T> m) {
  using Ops = RingOps<T>;
  if (!m.is_square()) throw input_error("determinant of a non-square matrix");
  const std::uint32_t n = m.rows();
  if (n == 0) throw input_error("determinant of an empty matrix");
  const T zero = Ops::zero(m.at(0, 0));
  T prev = Ops::one(m.at(0, 0));
  int sign = 1;
  for (std::uint32_t k = 0; k + 1 < n; ++k) {
    if (Ops::is_zero(m.at(k, k))) {
      std::uint32_t r = k + 1;
      while (r < n && Ops::is_zero(m.at(r, k))) ++r;
      if (r == n) return zero;
      m.swap_rows(k, r);
      sign = -sign;
    }
    for (std::uint32_t i = k + 1; i < n; ++i) {
      for (std::uint32_t j = k + 1; j < n; ++j) {
        T num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
        try {
          m.at(i, j) = Ops::exact_div(num, prev);
        } catch (const inexact_division&) {
          throw internal_inconsistency("fraction-free elimination division failed");
        }
      }
      m.at(i, k) = zero;
    }
    prev = m.at(k, k);
  }
  T det = m.at(n - 1, n - 1);
  if (sign < 0) det = zero - det;
  return det;
}

inline PolyMatrix poly_matrix(std::uint32_t rows, std::uint32_t cols, std::uint32_t arity) {
  return PolyMatrix(rows, cols, MPoly(arity));
}

inline std::uint32_t poly_matrix_arity(const PolyMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) throw input_error("empty polynomial matrix");
  const std::uint32_t a = m.at(0, 0).arity();
  for (std::uint32_t i = 0; i < m.rows(); ++i)
    for (std::uint32_t j = 0; j < m.cols(); ++j)
      if (m.at(i, j).arity() != a)
        throw internal_inconsistency("polynomial matrix with mixed arity");
  return a;
}

inline RatMatrix specialize(const PolyMatrix& m, const std::vector<Rat>& point) {
  RatMatrix out(m.rows(), m.cols(), Rat(0));
  for (std::uint32_t i = 0; i < m.rows(); ++i)
    for (std::uint32_t j = 0; j < m.cols(); ++j)
      out.at(i, j) = m.at(i, j).evaluate(point);
  return out;
}

template <typename T>
Matrix<T> mat_mul(const Matrix<T>& a, const Matrix<T>& b, const T& zero) {
  if (a.cols() != b.rows()) throw input_error("matrix product shape mismatch");
  Matrix<T> out(a.rows(), b.cols(), zero);
  for (std::uint32_t i = 0; i < a.rows(); ++i)
    for (std::uint32_t k = 0; k < a.cols(); ++k) {
      const T& aik = a.at(i, k);
      if (RingOps<T>::is_zero(aik)) continue;
      for (std::uint32_t j = 0; j < b.cols(); ++j)
        out.at(i, j) += aik * b.at(k, j);
    }
  return out;
}

}  // namespace symdet
