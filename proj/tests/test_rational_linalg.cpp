#include <catch2/catch_amalgamated.hpp>

#include <optional>
#include <vector>

#include "symdet/rational_linalg.hpp"
#include "symdet/rng.hpp"

using namespace symdet;

namespace {

RatMatrix random_matrix(Rng& rng, std::size_t r, std::size_t c, long span = 9) {
  RatMatrix m(r, c, Rat(0));
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = rat(rng.uniform(-span, span));
  return m;
}

std::vector<Rat> mat_apply(const RatMatrix& m, const std::vector<Rat>& v) {
  std::vector<Rat> out(m.rows(), Rat(0));
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

// Evaluate p at the matrix m by Horner; the zero matrix back is the
// Cayley-Hamilton statement when p is the characteristic polynomial.
RatMatrix eval_at_matrix(const UPoly& p, const RatMatrix& m) {
  RatMatrix acc(m.rows(), m.cols(), Rat(0));
  for (int k = p.degree(); k >= 0; --k) {
    acc = mat_mul(acc, m, Rat(0));
    const Rat c = p.coeff(static_cast<std::size_t>(k));
    for (std::size_t i = 0; i < m.rows(); ++i) acc(i, i) += c;
  }
  return acc;
}

}  // namespace

TEST_CASE("rank and nullity on fixed matrices") {
  RatMatrix m(3, 3, Rat(0));
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      m(i, j) = rat(static_cast<long>(3 * i + j + 1));  // rows in arithmetic progression
  CHECK(rank(m) == 2);
  CHECK(nullity(m) == 1);
  CHECK(rank(identity_matrix(4)) == 4);
  CHECK(rank(RatMatrix(2, 5, Rat(0))) == 0);
  CHECK(nullity(RatMatrix(2, 5, Rat(0))) == 5);

  const auto ns = nullspace_basis(m);
  REQUIRE(ns.size() == 1);
  CHECK(ns[0] == std::vector<Rat>{Rat(1), Rat(-2), Rat(1)});
}

TEST_CASE("rank is stable under transpose and bounded by factor width") {
  Rng rng(51);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 6));
    const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 6));
    const std::size_t k = static_cast<std::size_t>(rng.uniform(1, 4));
    const RatMatrix m = mat_mul(random_matrix(rng, r, k), random_matrix(rng, k, c), Rat(0));
    const std::size_t rk = rank(m);
    CHECK(rk <= k);
    CHECK(rank(m.transpose()) == rk);
    CHECK(rk + nullity(m) == c);
    for (const auto& v : nullspace_basis(m))
      CHECK(mat_apply(m, v) == std::vector<Rat>(r, Rat(0)));
  }
}

TEST_CASE("solve returns a witness exactly when consistent") {
  Rng rng(52);
  int consistent = 0, inconsistent = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t r = static_cast<std::size_t>(rng.uniform(1, 5));
    const std::size_t c = static_cast<std::size_t>(rng.uniform(1, 5));
    const RatMatrix a = random_matrix(rng, r, c);
    std::vector<Rat> b(r, Rat(0));
    if (rng.uniform(0, 1) == 0) {
      // plant a solution
      std::vector<Rat> x(c, Rat(0));
      for (auto& v : x) v = rat(rng.uniform(-9, 9));
      b = mat_apply(a, x);
    } else {
      for (auto& v : b) v = rat(rng.uniform(-9, 9));
    }
    const auto x = solve(a, b);
    if (x) {
      ++consistent;
      CHECK(mat_apply(a, *x) == b);
    } else {
      ++inconsistent;
      // b must lie outside the column span: rank grows when b is adjoined
      RatMatrix aug(r, c + 1, Rat(0));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < c; ++j) aug(i, j) = a(i, j);
        aug(i, c) = b[i];
      }
      CHECK(rank(aug) == rank(a) + 1);
    }
  }
  CHECK(consistent > 20);
  CHECK(inconsistent > 15);
  CHECK_THROWS_AS(solve(RatMatrix(2, 2, Rat(0)), std::vector<Rat>(3, Rat(0))),
                  input_error);
}

TEST_CASE("inverse multiplies back to the identity") {
  Rng rng(53);
  int invertible = 0;
  for (int trial = 0; trial < 80; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    const RatMatrix a = random_matrix(rng, n, n);
    const auto inv = inverse(a);
    if (!inv) {
      CHECK(rank(a) < n);
      continue;
    }
    ++invertible;
    CHECK(mat_mul(a, *inv, Rat(0)) == identity_matrix(n));
    CHECK(mat_mul(*inv, a, Rat(0)) == identity_matrix(n));
  }
  CHECK(invertible > 40);
  CHECK(!inverse(RatMatrix(3, 3, Rat(7))).has_value());
  CHECK_THROWS_AS(inverse(RatMatrix(2, 3, Rat(0))), input_error);
}

TEST_CASE("characteristic polynomial on fixed matrices") {
  // diag(1, 2, 3): (t-1)(t-2)(t-3) = t^3 - 6t^2 + 11t - 6
  RatMatrix d(3, 3, Rat(0));
  d(0, 0) = 1;
  d(1, 1) = 2;
  d(2, 2) = 3;
  CHECK(charpoly_exact(d) ==
        UPoly::from_coeffs({Rat(-6), Rat(11), Rat(-6), Rat(1)}));

  // companion matrix of t^3 + 4t^2 - 7t + 2 reproduces the polynomial
  const std::vector<Rat> tail = {Rat(2), Rat(-7), Rat(4)};
  RatMatrix comp(3, 3, Rat(0));
  comp(1, 0) = 1;
  comp(2, 1) = 1;
  for (std::size_t i = 0; i < 3; ++i) comp(i, 2) = -tail[i];
  CHECK(charpoly_exact(comp) ==
        UPoly::from_coeffs({Rat(2), Rat(-7), Rat(4), Rat(1)}));

  CHECK_THROWS_AS(charpoly_exact(RatMatrix(2, 3, Rat(0))), input_error);
}

TEST_CASE("characteristic polynomial invariants on random matrices") {
  Rng rng(54);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
    const RatMatrix a = random_matrix(rng, n, n);
    const UPoly cp = charpoly_exact(a);
    REQUIRE(cp.degree() == static_cast<int>(n));
    CHECK(cp.leading() == 1);

    Rat trace(0);
    for (std::size_t i = 0; i < n; ++i) trace += a(i, i);
    CHECK(cp.coeff(n - 1) == -trace);

    // constant term is (-1)^n det
    const Rat det = det_bareiss(a);
    CHECK(cp.coeff(0) == (n % 2 == 0 ? det : Rat(-det)));

    const RatMatrix zero(n, n, Rat(0));
    CHECK(eval_at_matrix(cp, a) == zero);

    CHECK(charpoly_exact(a.transpose()) == cp);
  }
}
