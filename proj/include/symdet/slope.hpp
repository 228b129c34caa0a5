#pragma once
// Constant-slope subspace machinery and the boundary-matrix pipeline. A
// half-dimensional subspace U is given by stacked matrices [A; B]; its slope
// polynomial p(x,y) = det [[A, -xI], [B, -yI]] detects the projective slopes
// [x0:y0] whose constant-slope vectors lie in U, with dimensions computed as
// exact nullities. A specialization of the symmetrized coset matrix is the
// boundary matrix; its rational eigenvalues n/m, taken in lowest terms,
// become slopes (m, n) whose filling rank is the eigenspace dimension.

#include <algorithm>
#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coset_matrix.hpp"
#include "cosets.hpp"
#include "errors.hpp"
#include "group.hpp"
#include "matrix.hpp"
#include "mpoly.hpp"
#include "rational.hpp"
#include "rational_linalg.hpp"
#include "spectral.hpp"
#include "upoly.hpp"

namespace symdet {

struct SubspacePair {
  std::uint32_t n = 0;
  RatMatrix a{0, 0, Rat(0)};
  RatMatrix b{0, 0, Rat(0)};
};

inline SubspacePair subspace_pair(RatMatrix a, RatMatrix b) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw input_error("subspace pair needs two square matrices of equal size");
  return {a.rows(), std::move(a), std::move(b)};
}

// Columns of [A; B] form a basis exactly when the stack has full column rank.
inline bool subspace_pair_valid(const SubspacePair& u) {
  RatMatrix stacked(2 * u.n, u.n, Rat(0));
  for (std::uint32_t i = 0; i < u.n; ++i)
    for (std::uint32_t j = 0; j < u.n; ++j) {
      stacked.at(i, j) = u.a.at(i, j);
      stacked.at(u.n + i, j) = u.b.at(i, j);
    }
  return rank(stacked) == u.n;
}

struct SlopePolynomial {
  MPoly poly = MPoly(2);   // bivariate, variable 0 = x, variable 1 = y
  std::uint32_t degree = 0;  // the subspace dimension n
  bool degenerate = false;   // identically zero: the rank invariant failed
};

inline SlopePolynomial slope_polynomial(const SubspacePair& u) {
  const std::uint32_t n = u.n;
  PolyMatrix block(2 * n, 2 * n, MPoly::constant(2, Rat(0)));
  const MPoly x = MPoly::variable(2, 0);
  const MPoly y = MPoly::variable(2, 1);
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      block.at(i, j) = MPoly::constant(2, u.a.at(i, j));
      block.at(n + i, j) = MPoly::constant(2, u.b.at(i, j));
    }
    block.at(i, n + i) = -x;
    block.at(n + i, n + i) = -y;
  }
  SlopePolynomial out;
  out.poly = n == 0 ? MPoly::constant(2, Rat(1)) : det_bareiss(block);
  out.degree = n;
  out.degenerate = out.poly.is_zero();
  if (!out.degenerate && out.poly.total_degree() != static_cast<int>(n))
    throw internal_inconsistency("slope polynomial has the wrong degree");
  return out;
}

inline bool same_up_to_sign(const MPoly& p, const MPoly& q) {
  return p == q || p == -q;
}

// Dimension of the subspace of constant-slope [x0:y0] vectors inside U.
inline std::uint32_t constant_slope_dim(const SubspacePair& u, const Rat& x0,
                                        const Rat& y0) {
  if (x0 == 0 && y0 == 0)
    throw input_error("slope [0:0] is not a projective point");
  const std::uint32_t n = u.n;
  RatMatrix block(2 * n, 2 * n, Rat(0));
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      block.at(i, j) = u.a.at(i, j);
      block.at(n + i, j) = u.b.at(i, j);
    }
    block.at(i, n + i) = -x0;
    block.at(n + i, n + i) = -y0;
  }
  return static_cast<std::uint32_t>(nullity(block));
}

// Slope m*alpha + n*beta as a coprime integer pair, normalized so m > 0, or
// (0, 1) for the beta direction. The associated eigenvalue is n/m.
struct Slope {
  mpz_class m = 0;
  mpz_class n = 1;

  friend bool operator==(const Slope& a, const Slope& b) {
    return a.m == b.m && a.n == b.n;
  }
};

inline Slope slope_of_eigenvalue(const Rat& lambda) {
  return {lambda.get_den(), lambda.get_num()};
}

inline Slope normalize_slope(const Rat& x0, const Rat& y0) {
  if (x0 == 0 && y0 == 0)
    throw input_error("slope [0:0] is not a projective point");
  if (x0 == 0) return {0, 1};
  return slope_of_eigenvalue(y0 / x0);
}

struct SlopeRank {
  Slope slope;
  std::uint32_t dim = 0;  // filling rank / constant-slope dimension
};

struct SlopeScan {
  // Finite slopes ascending by eigenvalue n/m; the beta slope (0,1) last.
  std::vector<SlopeRank> slopes;
  std::vector<std::uint32_t> residual_degrees;
  bool complete = true;
};

inline SlopeScan slopes_with_positive_rank(const SubspacePair& u) {
  const SlopePolynomial p = slope_polynomial(u);
  if (p.degenerate)
    throw input_error(
        "slope polynomial is identically zero: the pair does not span a "
        "half-dimensional subspace");
  // Dehomogenize at x = 1; the lost x-power corresponds to the [0:1] slope.
  const MPoly q = p.poly.substitute(
      {MPoly::constant(1, Rat(1)), MPoly::variable(1, 0)});
  const UPoly dehom = UPoly::from_mpoly(q, 0);
  const std::uint32_t beta_power =
      u.n - static_cast<std::uint32_t>(dehom.degree());

  SlopeScan out;
  const RationalRootsResult roots = rational_roots(dehom);
  out.complete = roots.complete;
  UPoly residual = dehom;
  for (const Rat& r : roots.roots) {
    const UPoly lin = UPoly::from_coeffs({-r, Rat(1)});
    while (residual.degree() >= 1 && residual.evaluate(r) == 0)
      residual = UPoly::exact_divide(residual, lin);
    out.slopes.push_back({slope_of_eigenvalue(r),
                          constant_slope_dim(u, Rat(1), r)});
  }
  if (residual.degree() > 0) {
    for (const auto& [factor, mult] : squarefree_decomposition(residual))
      for (std::uint32_t t = 0; t < mult; ++t)
        out.residual_degrees.push_back(
            static_cast<std::uint32_t>(factor.degree()));
    std::sort(out.residual_degrees.begin(), out.residual_degrees.end());
  }
  if (beta_power > 0)
    out.slopes.push_back({Slope{0, 1}, constant_slope_dim(u, Rat(0), Rat(1))});
  for (const auto& s : out.slopes)
    if (s.dim == 0)
      throw internal_inconsistency("slope root with zero-dimensional space");
  return out;
}

// Eigenvalue route: with A invertible, constant-slope [x:y] vectors in U
// correspond to (y/x)-eigenvectors of B A^{-1}.
inline Spectrum eigen_route(const SubspacePair& u) {
  const auto inv = inverse(u.a);
  if (!inv)
    throw input_error(
        "first matrix is singular: the subspace contains a constant-slope "
        "[0:1] vector, so the eigenvalue route does not apply");
  return rational_eigs(mat_mul(u.b, *inv, Rat(0)));
}

struct FillingSpec {
  FiniteGroup group;
  Subgroup subgroup;
  std::vector<Rat> values;  // one rational per symmetrized class, class 0 first
};

inline RatMatrix boundary_matrix(const FillingSpec& spec) {
  const SymCosetSystem sys = sym_coset_matrix(spec.group, spec.subgroup);
  if (spec.values.size() != sys.legend.names.size())
    throw input_error("specialization must assign a value to every class");
  const std::uint32_t k = sys.matrix.rows();
  RatMatrix out(k, k, Rat(0));
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j)
      out.at(i, j) = sys.matrix.at(i, j).evaluate(spec.values);
  if (!is_symmetric(out))
    throw internal_inconsistency("boundary matrix is not symmetric");
  return out;
}

struct FillRankReport {
  // Ascending by eigenvalue n/m.
  std::vector<SlopeRank> slopes;
  std::vector<std::uint32_t> residual_degrees;
  std::uint32_t k = 0;           // matrix size = subgroup index
  std::uint32_t slope_bound = 0;  // distinct virtual slopes are at most this
  bool complete = true;
};

inline FillRankReport filling_ranks(const FillingSpec& spec) {
  const RatMatrix b = boundary_matrix(spec);
  const Spectrum eigs = rational_eigs(b);
  FillRankReport out;
  out.k = b.rows();
  out.slope_bound = b.rows();
  out.complete = eigs.complete;
  out.residual_degrees = eigs.residual_degrees;
  for (const auto& e : eigs.eigenvalues) {
    if (e.eigenspace_dim == 0)
      throw internal_inconsistency("eigenvalue with empty eigenspace");
    out.slopes.push_back({slope_of_eigenvalue(e.value), e.eigenspace_dim});
  }
  if (out.slopes.size() > out.slope_bound)
    throw internal_inconsistency("more slopes than the coset count allows");
  for (std::size_t i = 0; i < out.slopes.size(); ++i)
    for (std::size_t j = i + 1; j < out.slopes.size(); ++j)
      if (out.slopes[i].slope == out.slopes[j].slope)
        throw internal_inconsistency("duplicate slope in the report");
  return out;
}

// Checks whether a function on coset pairs, given as a k x k rational matrix
// indexed by the coset representatives, has the three structural properties a
// boundary matrix must have, and on full success recovers the induced
// per-class function.
struct BoundaryIdentityReport {
  bool invariance_ok = true;
  bool symmetry_ok = true;
  bool inversion_ok = true;
  // Witnesses on failure: (g, i, j) with f(i,j) != f(g.i, g.j); (i, j) with
  // f(i,j) != f(j,i); j with f(0, j) != f(0, inv-coset of j).
  std::optional<std::array<std::uint32_t, 3>> invariance_witness;
  std::optional<std::array<std::uint32_t, 2>> symmetry_witness;
  std::optional<std::uint32_t> inversion_witness;
  std::optional<std::vector<Rat>> recovered;  // class values, on full pass

  bool all_ok() const { return invariance_ok && symmetry_ok && inversion_ok; }
};

inline BoundaryIdentityReport verify_boundary_identities(
    const RatMatrix& f, const FiniteGroup& g, const Subgroup& h) {
  const CosetTable cosets = left_cosets(g, h);
  const std::uint32_t k = cosets.count();
  if (f.rows() != k || f.cols() != k)
    throw input_error("matrix size must equal the coset count");

  BoundaryIdentityReport report;
  for (std::uint32_t e = 0; e < g.order() && report.invariance_ok; ++e)
    for (std::uint32_t i = 0; i < k && report.invariance_ok; ++i)
      for (std::uint32_t j = 0; j < k; ++j) {
        const std::uint32_t ei = cosets.coset_of[g.mul(e, cosets.reps[i])];
        const std::uint32_t ej = cosets.coset_of[g.mul(e, cosets.reps[j])];
        if (f.at(i, j) != f.at(ei, ej)) {
          report.invariance_ok = false;
          report.invariance_witness = {{e, i, j}};
          break;
        }
      }
  for (std::uint32_t i = 0; i < k && report.symmetry_ok; ++i)
    for (std::uint32_t j = i + 1; j < k; ++j)
      if (f.at(i, j) != f.at(j, i)) {
        report.symmetry_ok = false;
        report.symmetry_witness = {{i, j}};
        break;
      }
  for (std::uint32_t j = 0; j < k; ++j) {
    const std::uint32_t ji = cosets.coset_of[g.inv(cosets.reps[j])];
    if (f.at(0, j) != f.at(0, ji)) {
      report.inversion_ok = false;
      report.inversion_witness = j;
      break;
    }
  }

  if (report.all_ok()) {
    const SymClassPartition classes = sym_classes(g, h);
    std::vector<Rat> values(classes.count(), Rat(0));
    std::vector<bool> seen(classes.count(), false);
    for (std::uint32_t i = 0; i < k; ++i)
      for (std::uint32_t j = 0; j < k; ++j) {
        const std::uint32_t cls = classes.class_of[g.mul(
            g.inv(cosets.reps[i]), cosets.reps[j])];
        if (!seen[cls]) {
          seen[cls] = true;
          values[cls] = f.at(i, j);
        } else if (values[cls] != f.at(i, j)) {
          throw internal_inconsistency(
              "identities passed but the class function is ill-defined");
        }
      }
    report.recovered = std::move(values);
  }
  return report;
}

}  // namespace symdet
