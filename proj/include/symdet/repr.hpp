#pragma once
// Matrix representations over Q: the right regular representation, permutation
// representations, direct sums, and their symbolic representation matrices
// M(rho) = sum_g rho(g) X_g. On top of those: the subgroup-fixed-space
// projector P = sum_h rho(h) with its rank facts (the symbolic rank of the
// symmetrized representation matrix equals rank P, and when that rank is 1 the
// unique nonzero eigenvalue is the per-class trace form), the projective-line
// eigenform of PSL(2,p), and a complex-character cross-check of the group
// determinant for abelian groups.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
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
#include "rng.hpp"

namespace symdet {

struct MatrixRep {
  FiniteGroup group;
  std::uint32_t dim = 0;
  std::vector<RatMatrix> mats;  // one per group element
};

struct LinearForm {
  std::vector<Rat> coeffs;  // coefficient per class variable

  MPoly to_poly() const {
    const auto vars = static_cast<std::uint32_t>(coeffs.size());
    MPoly out = MPoly::constant(vars, Rat(0));
    for (std::uint32_t s = 0; s < vars; ++s)
      out = out + MPoly::variable(vars, s) * coeffs[s];
    return out;
  }
};

// Spot-checks the representation axioms: identity maps to I, sampled elements
// are invertible, and the homomorphism property holds on random pairs.
inline void check_rep(const MatrixRep& rho, std::uint32_t trials = 64,
                      std::uint64_t seed = kDefaultSeed) {
  const std::uint32_t n = rho.group.order();
  if (rho.mats.size() != n)
    throw internal_inconsistency("representation is missing element matrices");
  for (const auto& m : rho.mats)
    if (m.rows() != rho.dim || m.cols() != rho.dim)
      throw internal_inconsistency("representation matrix has wrong shape");
  if (!(rho.mats[FiniteGroup::kIdentity] == identity_matrix(rho.dim)))
    throw internal_inconsistency("identity does not map to the identity matrix");
  Rng rng(seed);
  for (std::uint32_t t = 0; t < trials; ++t) {
    const auto a = static_cast<std::uint32_t>(rng.uniform(0, n - 1));
    const auto b = static_cast<std::uint32_t>(rng.uniform(0, n - 1));
    if (!(mat_mul(rho.mats[a], rho.mats[b], Rat(0)) ==
          rho.mats[rho.group.mul(a, b)]))
      throw internal_inconsistency("representation is not a homomorphism");
    if (rank(rho.mats[a]) != rho.dim)
      throw internal_inconsistency("representation matrix is singular");
  }
}

inline MatrixRep perm_matrix_rep(const FiniteGroup& g,
                                 const PermutationRep& action) {
  if (action.perm.size() != g.order())
    throw input_error("action size does not match the group order");
  MatrixRep rho{g, action.degree, {}};
  rho.mats.reserve(g.order());
  for (std::uint32_t e = 0; e < g.order(); ++e) {
    RatMatrix m(action.degree, action.degree, Rat(0));
    for (std::uint32_t x = 0; x < action.degree; ++x)
      m.at(action.perm[e][x], x) = Rat(1);
    rho.mats.push_back(std::move(m));
  }
  check_rep(rho);
  return rho;
}

// Right regular action: the element h permutes the group by g -> g * h^{-1}.
inline MatrixRep regular_rep(const FiniteGroup& g) {
  PermutationRep action;
  action.degree = g.order();
  action.perm.assign(g.order(), std::vector<std::uint32_t>(g.order()));
  for (std::uint32_t h = 0; h < g.order(); ++h) {
    const std::uint32_t hi = g.inv(h);
    for (std::uint32_t x = 0; x < g.order(); ++x)
      action.perm[h][x] = g.mul(x, hi);
  }
  return perm_matrix_rep(g, action);
}

// One-dimensional representation from rational character values (necessarily
// +-1 valued for a homomorphism into Q*, but any multiplicative table is
// accepted and fully validated).
inline MatrixRep scalar_rep(const FiniteGroup& g, std::vector<Rat> values) {
  if (values.size() != g.order())
    throw input_error("need one scalar per group element");
  for (std::uint32_t a = 0; a < g.order(); ++a)
    for (std::uint32_t b = 0; b < g.order(); ++b)
      if (values[a] * values[b] != values[g.mul(a, b)])
        throw input_error("scalars are not multiplicative over the group");
  MatrixRep rho{g, 1, {}};
  for (const auto& v : values) rho.mats.push_back(RatMatrix(1, 1, v));
  check_rep(rho);
  return rho;
}

inline MatrixRep direct_sum_rep(const MatrixRep& a, const MatrixRep& b) {
  if (a.group.order() != b.group.order())
    throw input_error("direct sum needs representations of the same group");
  for (std::uint32_t x = 0; x < a.group.order(); ++x)
    for (std::uint32_t y = 0; y < a.group.order(); ++y)
      if (a.group.mul(x, y) != b.group.mul(x, y))
        throw input_error("direct sum needs representations of the same group");
  MatrixRep out{a.group, a.dim + b.dim, {}};
  for (std::uint32_t e = 0; e < a.group.order(); ++e) {
    RatMatrix m(out.dim, out.dim, Rat(0));
    for (std::uint32_t i = 0; i < a.dim; ++i)
      for (std::uint32_t j = 0; j < a.dim; ++j)
        m.at(i, j) = a.mats[e].at(i, j);
    for (std::uint32_t i = 0; i < b.dim; ++i)
      for (std::uint32_t j = 0; j < b.dim; ++j)
        m.at(a.dim + i, a.dim + j) = b.mats[e].at(i, j);
    out.mats.push_back(std::move(m));
  }
  check_rep(out);
  return out;
}

// M(rho) = sum_g rho(g) X_g, one variable per group element.
inline PolyMatrix rep_matrix(const MatrixRep& rho) {
  const std::uint32_t vars = rho.group.order();
  PolyMatrix out(rho.dim, rho.dim, MPoly::constant(vars, Rat(0)));
  for (std::uint32_t g = 0; g < vars; ++g) {
    const MPoly x = MPoly::variable(vars, g);
    for (std::uint32_t i = 0; i < rho.dim; ++i)
      for (std::uint32_t j = 0; j < rho.dim; ++j)
        if (rho.mats[g].at(i, j) != 0)
          out.at(i, j) = out.at(i, j) + x * rho.mats[g].at(i, j);
  }
  return out;
}

// sum_g rho(g) Y_{sigma(g)}, one variable per symmetrized double coset.
inline PolyMatrix sym_rep_matrix(const MatrixRep& rho, const Subgroup& h) {
  const SymClassPartition part = sym_classes(rho.group, h);
  const std::uint32_t vars = part.count();
  PolyMatrix out(rho.dim, rho.dim, MPoly::constant(vars, Rat(0)));
  for (std::uint32_t g = 0; g < rho.group.order(); ++g) {
    const MPoly y = MPoly::variable(vars, part.class_of[g]);
    for (std::uint32_t i = 0; i < rho.dim; ++i)
      for (std::uint32_t j = 0; j < rho.dim; ++j)
        if (rho.mats[g].at(i, j) != 0)
          out.at(i, j) = out.at(i, j) + y * rho.mats[g].at(i, j);
  }
  return out;
}

struct Projector {
  RatMatrix matrix;
  std::uint32_t rank = 0;
};

// P = sum_{h in H} rho(h); its rank is the dimension of the H-fixed subspace,
// which for a permutation representation is the number of H-orbits.
inline Projector fixed_projector(const MatrixRep& rho, const Subgroup& h) {
  RatMatrix p(rho.dim, rho.dim, Rat(0));
  for (std::uint32_t member : h.members) {
    const RatMatrix& m = rho.mats[member];
    for (std::uint32_t i = 0; i < rho.dim; ++i)
      for (std::uint32_t j = 0; j < rho.dim; ++j) p.at(i, j) += m.at(i, j);
  }
  for (std::uint32_t member : h.members)
    if (!(mat_mul(p, rho.mats[member], Rat(0)) == p))
      throw internal_inconsistency("projector is not H-invariant");
  return {p, static_cast<std::uint32_t>(symdet::rank(p))};
}

// Symbolic rank of sym_rep_matrix(rho, h): equal to rank of the projector, and
// independently confirmed by the rank of a random rational specialization
// (which can only fall below the symbolic rank on a degenerate sample).
inline std::uint32_t sym_rank(const MatrixRep& rho, const Subgroup& h,
                              std::uint64_t seed = kDefaultSeed) {
  const std::uint32_t expected = fixed_projector(rho, h).rank;
  const PolyMatrix sym = sym_rep_matrix(rho, h);
  const std::uint32_t vars = rho.dim == 0 ? 0 : sym.at(0, 0).arity();
  Rng rng(seed);
  for (int attempt = 0; attempt < 3; ++attempt) {
    std::vector<Rat> pt(vars);
    for (auto& c : pt) c = Rat(rng.uniform(-999, 999));
    RatMatrix sp(rho.dim, rho.dim, Rat(0));
    for (std::uint32_t i = 0; i < rho.dim; ++i)
      for (std::uint32_t j = 0; j < rho.dim; ++j)
        sp.at(i, j) = sym.at(i, j).evaluate(pt);
    if (symdet::rank(sp) == expected) return expected;
  }
  throw internal_inconsistency(
      "specialized rank disagrees with the projector rank after 3 resamples");
}

// When the projector has rank 1, the unique nonzero eigenvalue of the
// symmetrized representation matrix is its trace, collected per class.
inline LinearForm trace_eigenform(const MatrixRep& rho, const Subgroup& h) {
  if (fixed_projector(rho, h).rank != 1)
    throw input_error("trace eigenform needs a rank-1 fixed projector");
  const SymClassPartition part = sym_classes(rho.group, h);
  LinearForm form;
  form.coeffs.assign(part.count(), Rat(0));
  for (std::uint32_t g = 0; g < rho.group.order(); ++g) {
    Rat tr(0);
    for (std::uint32_t i = 0; i < rho.dim; ++i) tr += rho.mats[g].at(i, i);
    form.coeffs[part.class_of[g]] += tr;
  }
  return form;
}

struct Psl2Lambda {
  LinearForm form;                     // per-class coefficients, class 0 first
  std::uint32_t multiplicity_bound = 0;  // eigenspace dimension is >= this
};

// Eigenform of the symmetrized coset matrix of PSL(2,p) relative to the
// unitriangular subgroup: the per-class trace of the (p+1)-point projective
// permutation action minus its trivial summand, divided by |H| = p. The
// class-0 coefficient lands at exactly 1; anything else is reported as an
// internal inconsistency.
inline Psl2Lambda psl2_lambda(std::uint32_t p) {
  const Psl2Setup setup = psl2_projective_action(p);
  const SymClassPartition part = sym_classes(setup.group, setup.unipotent);
  LinearForm prime;
  prime.coeffs.assign(part.count(), Rat(0));
  for (std::uint32_t g = 0; g < setup.group.order(); ++g)
    prime.coeffs[part.class_of[g]] +=
        Rat(setup.action.fixed_points(g)) - Rat(1);
  for (auto& c : prime.coeffs) c /= Rat(p);
  if (prime.coeffs[0] != 1)
    throw internal_inconsistency("projective eigenform is not monic in Y_0");
  return {std::move(prime), p};
}

// Evaluates the product of all complex character sums at an integer point and
// compares it with the exact group determinant there. Only meaningful for
// abelian groups, where the determinant splits into degree-one character
// factors.
inline bool abelian_det_crosscheck(const FiniteGroup& g,
                                   const std::vector<long>& point,
                                   double tol = 1e-9) {
  if (!g.is_abelian())
    throw input_error("character cross-check needs an abelian group");
  if (point.size() != g.order())
    throw input_error("need one coordinate per group element");

  // Build all |G| characters by extending along a generating chain: each new
  // generator g with g^m the first power inside the current subgroup splits
  // every character into m extensions, one per m-th root of the known value.
  using Cx = std::complex<double>;
  struct Character {
    std::vector<Cx> values;  // indexed by element; defined on the subgroup
  };
  std::vector<std::uint32_t> subgroup = {FiniteGroup::kIdentity};
  std::vector<Character> chars(1);
  chars[0].values.assign(g.order(), Cx(0.0));
  chars[0].values[FiniteGroup::kIdentity] = Cx(1.0);

  std::vector<bool> in(g.order(), false);
  in[FiniteGroup::kIdentity] = true;
  for (std::uint32_t gen = 0; gen < g.order(); ++gen) {
    if (in[gen]) continue;
    std::uint32_t m = 1;
    std::uint32_t acc = gen;
    while (!in[acc]) {
      acc = g.mul(acc, gen);
      ++m;
    }
    std::vector<Character> extended;
    extended.reserve(chars.size() * m);
    for (const auto& chi : chars) {
      const Cx known = chi.values[acc];
      const double base_arg = std::arg(known);
      for (std::uint32_t r = 0; r < m; ++r) {
        const double theta =
            (base_arg + 2.0 * std::numbers::pi * static_cast<double>(r)) /
            static_cast<double>(m);
        const Cx root(std::cos(theta), std::sin(theta));
        Character next = chi;
        Cx power(1.0);
        std::uint32_t gp = FiniteGroup::kIdentity;
        for (std::uint32_t t = 0; t < m; ++t) {
          for (std::uint32_t s : subgroup)
            next.values[g.mul(s, gp)] = chi.values[s] * power;
          power *= root;
          gp = g.mul(gp, gen);
        }
        extended.push_back(std::move(next));
      }
    }
    chars = std::move(extended);
    std::vector<std::uint32_t> grown;
    std::uint32_t gp = FiniteGroup::kIdentity;
    for (std::uint32_t t = 0; t < m; ++t) {
      for (std::uint32_t s : subgroup) {
        const std::uint32_t e = g.mul(s, gp);
        grown.push_back(e);
        in[e] = true;
      }
      gp = g.mul(gp, gen);
    }
    subgroup = std::move(grown);
  }
  if (chars.size() != g.order())
    throw internal_inconsistency("character count does not match the order");

  Cx product(1.0);
  for (const auto& chi : chars) {
    Cx sum(0.0);
    for (std::uint32_t e = 0; e < g.order(); ++e)
      sum += chi.values[e] * static_cast<double>(point[e]);
    product *= sum;
  }

  std::vector<Rat> rat_point;
  rat_point.reserve(point.size());
  for (long c : point) rat_point.emplace_back(c);
  const Rat exact = group_determinant(g).evaluate(rat_point);
  const double exact_d = exact.get_d();
  const double err = std::abs(product - Cx(exact_d));
  const double scale = std::max(1.0, std::abs(exact_d));
  return err / scale < tol;
}

}  // namespace symdet
