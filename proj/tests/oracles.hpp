#pragma once

// Test-only oracles, kept deliberately naive and independent of the library's
// production algorithms.

#include <cstdint>
#include <vector>

#include "symdet/matrix.hpp"

namespace symdet::testing {

// cofactor expansion along the first row; exponential, fine up to ~6x6
template <typename T>
T det_cofactor(const Matrix<T>& m) {
  const std::uint32_t n = m.rows();
  if (n == 1) return m.at(0, 0);
  T acc = RingOps<T>::zero(m.at(0, 0));
  for (std::uint32_t j = 0; j < n; ++j) {
    if (RingOps<T>::is_zero(m.at(0, j))) continue;
    Matrix<T> minor(n - 1, n - 1, m.at(0, 0));
    for (std::uint32_t i = 1; i < n; ++i) {
      std::uint32_t cc = 0;
      for (std::uint32_t c = 0; c < n; ++c) {
        if (c == j) continue;
        minor.at(i - 1, cc++) = m.at(i, c);
      }
    }
    const T contrib = m.at(0, j) * det_cofactor(minor);
    if (j % 2 == 0)
      acc += contrib;
    else
      acc -= contrib;
  }
  return acc;
}

}  // namespace symdet::testing
