#pragma once
// Exact eigen-analysis over Q: complete rational spectra of rational matrices
// (eigenvalues, algebraic multiplicities, eigenspace dimensions, and the
// degrees of the irrational residual), plus discovery and verification of
// linear eigenvalue forms of symbolic symmetric matrices whose entries have
// degree <= 1 in the class variables. A linear eigenvalue form of multiplicity
// m is exactly a linear factor of the determinant with that multiplicity.

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "coset_matrix.hpp"
#include "errors.hpp"
#include "matrix.hpp"
#include "mpoly.hpp"
#include "parallel.hpp"
#include "rational.hpp"
#include "rational_linalg.hpp"
#include "rng.hpp"
#include "upoly.hpp"

namespace symdet {

struct EigenvalueEntry {
  Rat value;
  std::uint32_t algebraic_multiplicity = 0;
  std::uint32_t eigenspace_dim = 0;
};

struct Spectrum {
  // Ascending by eigenvalue.
  std::vector<EigenvalueEntry> eigenvalues;
  // Degrees of the squarefree factors of the rational-root-free cofactor of
  // the characteristic polynomial, one entry per factor per multiplicity,
  // ascending. Sum of algebraic multiplicities + sum of these = matrix size.
  std::vector<std::uint32_t> residual_degrees;
  bool complete = true;
};

inline bool is_symmetric(const RatMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::uint32_t i = 0; i < m.rows(); ++i)
    for (std::uint32_t j = i + 1; j < m.cols(); ++j)
      if (m.at(i, j) != m.at(j, i)) return false;
  return true;
}

inline bool is_symmetric(const PolyMatrix& m) {
  if (m.rows() != m.cols()) return false;
  for (std::uint32_t i = 0; i < m.rows(); ++i)
    for (std::uint32_t j = i + 1; j < m.cols(); ++j)
      if (!(m.at(i, j) == m.at(j, i))) return false;
  return true;
}

inline Spectrum rational_eigs(const RatMatrix& m,
                              RootMethod method = RootMethod::Auto) {
  if (m.rows() != m.cols())
    throw input_error("rational_eigs requires a square matrix");
  Spectrum out;
  if (m.rows() == 0) return out;

  const UPoly p = charpoly_exact(m);
  const RationalRootsResult rr = rational_roots(p, method);
  out.complete = rr.complete;

  UPoly residual = p;
  for (const Rat& lambda : rr.roots) {
    const UPoly lin = UPoly::from_coeffs({-lambda, Rat(1)});
    std::uint32_t alg = 0;
    while (residual.degree() >= 1 && residual.evaluate(lambda) == 0) {
      residual = UPoly::exact_divide(residual, lin);
      ++alg;
    }
    RatMatrix shifted = m;
    for (std::uint32_t i = 0; i < m.rows(); ++i) shifted.at(i, i) -= lambda;
    out.eigenvalues.push_back(
        {lambda, alg, static_cast<std::uint32_t>(nullity(shifted))});
  }

  if (residual.degree() > 0) {
    for (const auto& [factor, mult] : squarefree_decomposition(residual))
      for (std::uint32_t r = 0; r < mult; ++r)
        out.residual_degrees.push_back(
            static_cast<std::uint32_t>(factor.degree()));
    std::sort(out.residual_degrees.begin(), out.residual_degrees.end());
  }

  std::uint32_t total = 0;
  for (const auto& e : out.eigenvalues) total += e.algebraic_multiplicity;
  for (std::uint32_t d : out.residual_degrees) total += d;
  if (total != m.rows())
    throw internal_inconsistency("spectrum degrees do not sum to matrix size");
  return out;
}

enum class VerificationKind { Symbolic, Probabilistic };

struct Verification {
  VerificationKind kind = VerificationKind::Symbolic;
  // Upper bound on the probability that a non-eigenform passed; 0 when the
  // identity det(M - lambda*I) = 0 was established symbolically.
  Rat failure_bound = Rat(0);
};

struct LinearEigenform {
  std::vector<Rat> coeffs;  // coefficient of each class variable
  std::uint32_t multiplicity = 0;
  Verification verification;

  MPoly form() const {
    const auto vars = static_cast<std::uint32_t>(coeffs.size());
    MPoly out = MPoly::constant(vars, Rat(0));
    for (std::uint32_t s = 0; s < vars; ++s)
      out = out + MPoly::variable(vars, s) * coeffs[s];
    return out;
  }
};

struct SamplerConfig {
  std::uint64_t seed = kDefaultSeed;
  // Extra large-range points for the probabilistic identity check.
  std::uint32_t sample_count = 8;
  // Each large-range coordinate is drawn from [1, coordinate_range]; the
  // per-point false-accept bound is size/coordinate_range.
  mpz_class coordinate_range = mpz_class(1) << 40;
  // Matrix sizes up to this bound get the symbolic determinant check instead.
  std::uint32_t symbolic_threshold = 12;
};

namespace detail {

inline std::vector<Rat> small_point(Rng& rng, std::uint32_t vars) {
  std::vector<Rat> pt(vars);
  for (auto& c : pt) c = Rat(rng.uniform(-999, 999));
  return pt;
}

inline std::vector<Rat> large_point(Rng& rng, std::uint32_t vars,
                                    const mpz_class& range) {
  std::vector<Rat> pt(vars);
  for (auto& c : pt) {
    mpz_class pool(rng.next());
    pool <<= 64;
    pool += mpz_class(rng.next());
    c = Rat(mpz_class(pool % range) + 1);
  }
  return pt;
}

inline RatMatrix specialize(const PolyMatrix& m, const std::vector<Rat>& pt) {
  RatMatrix out(m.rows(), m.cols(), Rat(0));
  for (std::uint32_t i = 0; i < m.rows(); ++i)
    for (std::uint32_t j = 0; j < m.cols(); ++j)
      out.at(i, j) = m.at(i, j).evaluate(pt);
  return out;
}

inline Rat eval_form(const std::vector<Rat>& coeffs,
                     const std::vector<Rat>& pt) {
  Rat out(0);
  for (std::size_t s = 0; s < coeffs.size(); ++s) out += coeffs[s] * pt[s];
  return out;
}

inline std::uint32_t shifted_nullity(const RatMatrix& m, const Rat& lambda) {
  RatMatrix shifted = m;
  for (std::uint32_t i = 0; i < m.rows(); ++i) shifted.at(i, i) -= lambda;
  return static_cast<std::uint32_t>(nullity(shifted));
}

}  // namespace detail

inline std::vector<LinearEigenform> find_linear_eigenforms(
    const PolyMatrix& m, const SamplerConfig& cfg = {}) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw input_error("eigenform search requires a nonempty square matrix");
  if (!is_symmetric(m))
    throw input_error("eigenform search requires a symmetric matrix");
  const std::uint32_t size = m.rows();
  const std::uint32_t vars = m.at(0, 0).arity();
  for (std::uint32_t i = 0; i < size; ++i)
    for (std::uint32_t j = 0; j < size; ++j)
      if (m.at(i, j).total_degree() > 1)
        throw input_error("eigenform search requires entries of degree <= 1");
  if (cfg.coordinate_range < (mpz_class(1) << 40))
    throw input_error("sampler coordinate range must be at least 2^40");
  if (cfg.sample_count == 0)
    throw input_error("sampler needs a positive sample count");

  Rng rng(cfg.seed);
  const std::size_t n_points = static_cast<std::size_t>(vars) + 3;

  // Specialization points; redraw the batch in the (measure-zero) event that
  // they fail to determine a linear form uniquely.
  std::vector<std::vector<Rat>> points;
  for (int attempt = 0;; ++attempt) {
    points.clear();
    for (std::size_t j = 0; j < n_points; ++j)
      points.push_back(detail::small_point(rng, vars));
    RatMatrix pm(static_cast<std::uint32_t>(n_points), vars, Rat(0));
    for (std::uint32_t j = 0; j < n_points; ++j)
      for (std::uint32_t s = 0; s < vars; ++s) pm.at(j, s) = points[j][s];
    if (rank(pm) == vars) break;
    if (attempt > 32)
      throw internal_inconsistency("sampler cannot span the coefficient space");
  }

  std::vector<RatMatrix> specialized;
  std::vector<Spectrum> spectra;
  for (const auto& pt : points) {
    specialized.push_back(detail::specialize(m, pt));
    spectra.push_back(rational_eigs(specialized.back()));
  }

  // One candidate per way of choosing a rational eigenvalue at every point,
  // pruned by solvability of the accumulated interpolation constraints.
  std::vector<std::vector<Rat>> alive(1);
  for (std::size_t j = 0; j < n_points; ++j) {
    std::vector<std::vector<Rat>> next;
    for (const auto& chosen : alive) {
      for (const auto& entry : spectra[j].eigenvalues) {
        std::vector<Rat> extended = chosen;
        extended.push_back(entry.value);
        RatMatrix rows(static_cast<std::uint32_t>(j) + 1, vars, Rat(0));
        for (std::uint32_t r = 0; r <= j; ++r)
          for (std::uint32_t s = 0; s < vars; ++s) rows.at(r, s) = points[r][s];
        if (solve(rows, extended)) next.push_back(std::move(extended));
      }
    }
    if (next.size() > 100000)
      throw input_error("eigenvalue combination search exploded");
    alive = std::move(next);
  }

  std::vector<std::vector<Rat>> candidates;
  {
    RatMatrix rows(static_cast<std::uint32_t>(n_points), vars, Rat(0));
    for (std::uint32_t r = 0; r < n_points; ++r)
      for (std::uint32_t s = 0; s < vars; ++s) rows.at(r, s) = points[r][s];
    for (const auto& chosen : alive) {
      const auto c = solve(rows, chosen);
      if (!c) throw internal_inconsistency("surviving candidate insoluble");
      const bool zero =
          std::all_of(c->begin(), c->end(), [](const Rat& x) { return x == 0; });
      if (!zero && std::find(candidates.begin(), candidates.end(), *c) ==
                       candidates.end())
        candidates.push_back(*c);
    }
  }

  std::vector<LinearEigenform> out;
  for (const auto& coeffs : candidates) {
    LinearEigenform form;
    form.coeffs = coeffs;

    std::vector<std::uint32_t> dims;
    for (std::size_t j = 0; j < n_points; ++j)
      dims.push_back(detail::shifted_nullity(
          specialized[j], detail::eval_form(coeffs, points[j])));

    bool verified = false;
    if (size <= cfg.symbolic_threshold) {
      PolyMatrix shifted = m;
      const MPoly lambda = form.form();
      for (std::uint32_t i = 0; i < size; ++i)
        shifted.at(i, i) = shifted.at(i, i) - lambda;
      verified = det_bareiss(shifted).is_zero();
      form.verification = {VerificationKind::Symbolic, Rat(0)};
    } else {
      bool all_deficient = true;
      for (std::uint32_t t = 0; t < cfg.sample_count && all_deficient; ++t) {
        const auto pt = detail::large_point(rng, vars, cfg.coordinate_range);
        const RatMatrix sp = detail::specialize(m, pt);
        const std::uint32_t dim =
            detail::shifted_nullity(sp, detail::eval_form(coeffs, pt));
        if (dim == 0) all_deficient = false;
        dims.push_back(dim);
      }
      verified = all_deficient;
      Rat bound = Rat(size) / Rat(cfg.coordinate_range);
      Rat compounded(1);
      for (std::uint32_t t = 0; t < cfg.sample_count; ++t) compounded *= bound;
      form.verification = {VerificationKind::Probabilistic, compounded};
    }
    if (!verified) continue;  // over-generation is expected; drop silently

    form.multiplicity = *std::min_element(dims.begin(), dims.end());

    std::uint32_t confirm = form.multiplicity + 1;
    for (int t = 0; t < 3; ++t) {
      const auto pt = detail::small_point(rng, vars);
      confirm = std::min(confirm,
                         detail::shifted_nullity(detail::specialize(m, pt),
                                                 detail::eval_form(coeffs, pt)));
    }
    if (confirm != form.multiplicity)
      throw internal_inconsistency(
          "eigenform multiplicity unstable across resamples");

    out.push_back(std::move(form));
  }

  const std::vector<std::string> names = variable_names(vars);
  std::sort(out.begin(), out.end(),
            [&](const LinearEigenform& a, const LinearEigenform& b) {
              if (a.multiplicity != b.multiplicity)
                return a.multiplicity > b.multiplicity;
              return canonical_string(a.form(), names) <
                     canonical_string(b.form(), names);
            });
  return out;
}

// Divides the determinant by the product of the reported linear factors with
// their multiplicities; exactness is re-checked by multiplication.
inline MPoly linear_factor_residual(const PolyMatrix& m,
                                    const std::vector<LinearEigenform>& forms) {
  if (m.rows() == 0 || m.rows() != m.cols())
    throw input_error("residual requires a nonempty square matrix");
  const std::uint32_t vars = m.at(0, 0).arity();
  const MPoly det = det_bareiss(m);
  MPoly product = MPoly::constant(vars, Rat(1));
  for (const auto& f : forms) {
    if (f.coeffs.size() != vars)
      throw input_error("eigenform arity does not match the matrix");
    const MPoly lambda = f.form();
    for (std::uint32_t r = 0; r < f.multiplicity; ++r)
      product = product * lambda;
  }
  MPoly residual(vars);
  if (!try_exact_divide(det, product, &residual))
    throw inexact_division(
        "claimed linear factors do not divide the determinant");
  if (!(residual * product == det))
    throw internal_inconsistency("residual re-multiplication mismatch");
  return residual;
}

}  // namespace symdet
