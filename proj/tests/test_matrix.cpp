#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"
#include "symdet/matrix.hpp"
#include "symdet/rng.hpp"

using namespace symdet;

namespace {

PolyMatrix random_poly_matrix(Rng& rng, std::uint32_t n, std::uint32_t arity) {
  PolyMatrix m = poly_matrix(n, n, arity);
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      const int terms = static_cast<int>(rng.uniform(0, 2));
      for (int t = 0; t < terms; ++t) {
        Expts e(arity);
        for (auto& x : e) x = static_cast<std::uint32_t>(rng.uniform(0, 2));
        m.at(i, j).add_term(e, rat(rng.uniform(-5, 5)));
      }
    }
  return m;
}

RatMatrix random_rat_matrix(Rng& rng, std::uint32_t n) {
  RatMatrix m(n, n, Rat(0));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      m.at(i, j) = rat(rng.uniform(-9, 9), rng.uniform(1, 4));
  return m;
}

}  // namespace

TEST_CASE("determinant basics") {
  PolyMatrix eye = poly_matrix(3, 3, 0);
  for (std::uint32_t i = 0; i < 3; ++i) eye.at(i, i) = MPoly::constant(0, rat(1));
  CHECK(det_bareiss(eye) == MPoly::constant(0, rat(1)));

  const MPoly a = MPoly::variable(2, 0), b = MPoly::variable(2, 1);
  PolyMatrix m = poly_matrix(2, 2, 2);
  m.at(0, 0) = a;
  m.at(0, 1) = b;
  m.at(1, 0) = b;
  m.at(1, 1) = a;
  CHECK(det_bareiss(m) == a * a - b * b);

  PolyMatrix one = poly_matrix(1, 1, 2);
  one.at(0, 0) = a;
  CHECK(det_bareiss(one) == a);

  // duplicate rows: singular, zero short-circuit path
  PolyMatrix dup = poly_matrix(2, 2, 2);
  dup.at(0, 0) = a;
  dup.at(0, 1) = b;
  dup.at(1, 0) = a;
  dup.at(1, 1) = b;
  CHECK(det_bareiss(dup).is_zero());

  // zero leading pivot forces a row swap
  PolyMatrix sw = poly_matrix(2, 2, 2);
  sw.at(0, 1) = a;
  sw.at(1, 0) = b;
  CHECK(det_bareiss(sw) == MPoly(2) - b * a);
}

TEST_CASE("fraction-free determinant matches cofactor expansion") {
  Rng rng(31337);
  for (int trial = 0; trial < 200; ++trial) {
    const std::uint32_t n = static_cast<std::uint32_t>(rng.uniform(1, 4));
    const std::uint32_t arity = static_cast<std::uint32_t>(rng.uniform(1, 3));
    const PolyMatrix m = random_poly_matrix(rng, n, arity);
    CHECK(det_bareiss(m) == testing::det_cofactor(m));
  }
}

TEST_CASE("determinant is multiplicative over rationals") {
  Rng rng(555);
  for (int trial = 0; trial < 100; ++trial) {
    const RatMatrix x = random_rat_matrix(rng, 3), y = random_rat_matrix(rng, 3);
    CHECK(det_bareiss(mat_mul(x, y, Rat(0))) == det_bareiss(x) * det_bareiss(y));
  }
}

TEST_CASE("determinant is transpose-invariant") {
  Rng rng(777);
  for (int trial = 0; trial < 50; ++trial) {
    const std::uint32_t n = static_cast<std::uint32_t>(rng.uniform(1, 4));
    const PolyMatrix m = random_poly_matrix(rng, n, 2);
    CHECK(det_bareiss(m) == det_bareiss(m.transpose()));
  }
}

TEST_CASE("matrix plumbing") {
  PolyMatrix m = poly_matrix(2, 3, 1);
  m.at(1, 2) = MPoly::variable(1, 0);
  CHECK(m.transpose().at(2, 1) == MPoly::variable(1, 0));
  CHECK(poly_matrix_arity(m) == 1);
  CHECK_THROWS_AS(det_bareiss(m), input_error);

  const RatMatrix r(2, 2, Rat(3));
  const std::vector<Rat> pt = {rat(2)};
  CHECK(specialize(m, pt).at(1, 2) == rat(2));
}
