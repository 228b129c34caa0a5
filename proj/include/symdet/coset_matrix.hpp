#pragma once
// Symbolic matrices attached to a group and a subgroup: the group matrix
// M(G) with (i,j) entry X_{g_i^-1 g_j}, its images under the three variable
// quotients (inversion classes, left cosets, double-coset inversion classes),
// the symmetrized coset matrix over the class variables Y_s, and the two
// routes to the characteristic polynomial of the latter (direct, and by the
// Y_H - t substitution into the full group matrix).

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symdet/cosets.hpp"
#include "symdet/errors.hpp"
#include "symdet/group.hpp"
#include "symdet/matrix.hpp"
#include "symdet/mpoly.hpp"

namespace symdet {

// Letters a, b, c, ... while they last, Y0, Y1, ... beyond; index 0 is always
// "a" or "Y0", which pins the class-0 variable name downstream.
inline std::vector<std::string> variable_names(std::uint32_t count) {
  std::vector<std::string> names;
  names.reserve(count);
  for (std::uint32_t i = 0; i < count; ++i)
    names.push_back(count <= 26 ? std::string(1, static_cast<char>('a' + i))
                                : "Y" + std::to_string(i));
  return names;
}

// Maps variable index to a printable name and to the set of group elements
// the variable stands for.
struct VariableLegend {
  std::vector<std::string> names;
  std::vector<std::vector<std::uint32_t>> members;
};

inline VariableLegend element_legend(const FiniteGroup& g) {
  VariableLegend legend{variable_names(g.order()), {}};
  legend.members.reserve(g.order());
  for (std::uint32_t i = 0; i < g.order(); ++i) legend.members.push_back({i});
  return legend;
}

inline VariableLegend class_legend(const SymClassPartition& classes) {
  return {variable_names(static_cast<std::uint32_t>(classes.classes.size())),
          classes.classes};
}

// Prepends the characteristic-polynomial variable, which sits at index 0 so
// it outranks every class variable in the printed term order. "t" is taken by
// a class letter only when 20 <= class count <= 26; the fallback "t0" cannot
// clash with either naming scheme.
inline VariableLegend legend_with_t(VariableLegend base) {
  std::string t = "t";
  for (const auto& n : base.names)
    if (n == t) t = "t0";
  base.names.insert(base.names.begin(), std::move(t));
  base.members.insert(base.members.begin(), {});
  return base;
}

// A variable identification X_g -> (variable of the class of g), recorded as
// an element-indexed image table plus the legend of the merged variables.
enum class QuotientKind { Sym, CosetH, SymH };

struct QuotientMap {
  QuotientKind kind;
  std::vector<std::uint32_t> image;  // element index -> class variable index
  std::uint32_t variable_count = 0;
  VariableLegend legend;
};

// X_g and X_{g^-1} merge: the double-coset classes of the trivial subgroup.
inline QuotientMap sym_quotient(const FiniteGroup& g) {
  const SymClassPartition classes = sym_classes(g, trivial_subgroup(g));
  return {QuotientKind::Sym, classes.class_of,
          static_cast<std::uint32_t>(classes.classes.size()),
          class_legend(classes)};
}

// X_g merges along the left coset gH.
inline QuotientMap coset_quotient(const FiniteGroup& g, const Subgroup& h) {
  const CosetTable cosets = left_cosets(g, h);
  VariableLegend legend{
      variable_names(static_cast<std::uint32_t>(cosets.reps.size())), {}};
  legend.members.assign(cosets.reps.size(), {});
  for (std::uint32_t e = 0; e < g.order(); ++e)
    legend.members[cosets.coset_of[e]].push_back(e);
  return {QuotientKind::CosetH, cosets.coset_of,
          static_cast<std::uint32_t>(cosets.reps.size()), std::move(legend)};
}

// X_g merges along the class HgH united with Hg^-1H.
inline QuotientMap sym_coset_quotient(const FiniteGroup& g, const Subgroup& h) {
  const SymClassPartition classes = sym_classes(g, h);
  return {QuotientKind::SymH, classes.class_of,
          static_cast<std::uint32_t>(classes.classes.size()),
          class_legend(classes)};
}

// Entry-wise variable renaming along the quotient.
inline PolyMatrix apply_quotient(const PolyMatrix& m, const QuotientMap& q) {
  if (m.rows() == 0) throw input_error("empty matrix");
  if (m.at(0, 0).arity() != q.image.size())
    throw input_error("matrix variables do not match the quotient domain");
  PolyMatrix out(m.rows(), m.cols(), MPoly(q.variable_count));
  for (std::uint32_t i = 0; i < m.rows(); ++i)
    for (std::uint32_t j = 0; j < m.cols(); ++j)
      out.at(i, j) = m.at(i, j).rename_variables(q.image, q.variable_count);
  return out;
}

inline PolyMatrix group_matrix(const FiniteGroup& g) {
  const std::uint32_t n = g.order();
  PolyMatrix m(n, n, MPoly(n));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      m.at(i, j) = MPoly::variable(n, g.mul(g.inv(i), j));
  return m;
}

// Same matrix with rows and columns listed in a caller-chosen element order;
// variables keep their original element indices.
inline PolyMatrix group_matrix_ordered(const FiniteGroup& g,
                                       const std::vector<std::uint32_t>& order) {
  const std::uint32_t n = g.order();
  if (order.size() != n) throw input_error("element order has wrong length");
  std::vector<bool> seen(n, false);
  for (std::uint32_t e : order) {
    if (e >= n || seen[e]) throw input_error("element order is not a permutation");
    seen[e] = true;
  }
  PolyMatrix m(n, n, MPoly(n));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      m.at(i, j) = MPoly::variable(n, g.mul(g.inv(order[i]), order[j]));
  return m;
}

// The k x k symmetrized coset matrix together with the data that indexes it.
struct SymCosetSystem {
  CosetTable cosets;
  SymClassPartition classes;
  PolyMatrix matrix;  // (i,j) entry: variable of the class of rep_i^-1 rep_j
  VariableLegend legend;
};

inline SymCosetSystem sym_coset_matrix(const FiniteGroup& g, const Subgroup& h) {
  CosetTable cosets = left_cosets(g, h);
  SymClassPartition classes = sym_classes(g, h);
  const std::uint32_t k = static_cast<std::uint32_t>(cosets.reps.size());
  const std::uint32_t vars = static_cast<std::uint32_t>(classes.classes.size());
  PolyMatrix m(k, k, MPoly(vars));
  for (std::uint32_t i = 0; i < k; ++i)
    for (std::uint32_t j = 0; j < k; ++j)
      m.at(i, j) = MPoly::variable(
          vars, classes.class_of[g.mul(g.inv(cosets.reps[i]), cosets.reps[j])]);
  for (std::uint32_t i = 0; i < k; ++i) {
    if (m.at(i, i) != MPoly::variable(vars, 0))
      throw internal_inconsistency("coset matrix diagonal left the identity class");
    for (std::uint32_t j = 0; j < i; ++j)
      if (m.at(i, j) != m.at(j, i))
        throw internal_inconsistency("coset matrix is not symmetric");
  }
  VariableLegend legend = class_legend(classes);
  return {std::move(cosets), std::move(classes), std::move(m), std::move(legend)};
}

inline MPoly group_determinant(const FiniteGroup& g) {
  return det_bareiss(group_matrix(g));
}

inline MPoly sym_group_determinant(const FiniteGroup& g) {
  return det_bareiss(apply_quotient(group_matrix(g), sym_quotient(g)));
}

inline MPoly sym_coset_determinant(const FiniteGroup& g, const Subgroup& h) {
  return det_bareiss(sym_coset_matrix(g, h).matrix);
}

// det(t*I - M) with t prepended as variable 0 (so it leads the printed term
// order) and the matrix variables shifted up by one; monic in t.
inline MPoly charpoly_direct(const PolyMatrix& m) {
  if (m.rows() != m.cols())
    throw input_error("characteristic polynomial of a non-square matrix");
  if (m.rows() == 0) throw input_error("empty matrix");
  const std::uint32_t arity = m.at(0, 0).arity();
  const MPoly t = MPoly::variable(arity + 1, 0);
  std::vector<std::uint32_t> shift(arity);
  for (std::uint32_t i = 0; i < arity; ++i) shift[i] = i + 1;
  PolyMatrix shifted(m.rows(), m.rows(), MPoly(arity + 1));
  for (std::uint32_t i = 0; i < m.rows(); ++i)
    for (std::uint32_t j = 0; j < m.rows(); ++j) {
      shifted.at(i, j) =
          MPoly(arity + 1) - m.at(i, j).rename_variables(shift, arity + 1);
      if (i == j) shifted.at(i, j) += t;
    }
  MPoly cp = det_bareiss(shifted);
  if (cp.degree_in(0) != static_cast<int>(m.rows()) ||
      !cp.coeff_of_var_power(0, m.rows()).is_constant() ||
      cp.coeff_of_var_power(0, m.rows()).constant_value() != 1)
    throw internal_inconsistency("characteristic polynomial is not monic of full degree");
  return cp;
}

struct SubstitutionCharpoly {
  MPoly charpoly;  // t at variable 0, class variables at 1..|S|; monic in t
  std::uint32_t cofactor_exponent = 0;  // stripped power of t; always |G| - k
  VariableLegend legend;
};

// Characteristic polynomial of the symmetrized coset matrix computed without
// ever forming it: in the full group matrix, send every X_g to its class
// variable except that the identity picks up a -t, take the determinant,
// strip the forced t^(|G|-k) cofactor, rescale t by |H|, and normalize to
// monic. The result coincides with charpoly_direct(sym_coset_matrix(...)).
inline SubstitutionCharpoly charpoly_via_substitution(const FiniteGroup& g,
                                                      const Subgroup& h) {
  const SymClassPartition classes = sym_classes(g, h);
  const std::uint32_t n = g.order();
  const std::uint32_t k = n / static_cast<std::uint32_t>(h.members.size());
  const std::uint32_t vars = static_cast<std::uint32_t>(classes.classes.size());
  const MPoly t = MPoly::variable(vars + 1, 0);  // class c sits at index c + 1

  PolyMatrix m(n, n, MPoly(vars + 1));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) {
      const std::uint32_t e = g.mul(g.inv(i), j);
      MPoly entry = MPoly::variable(vars + 1, classes.class_of[e] + 1);
      if (e == FiniteGroup::kIdentity) entry -= t;
      m.at(i, j) = entry;
    }

  MPoly d = det_bareiss(m);
  if (d.is_zero())
    throw internal_inconsistency("substituted group determinant vanished");
  const std::uint32_t cofactor = static_cast<std::uint32_t>(d.min_degree_in(0));
  if (cofactor != n - k)
    throw internal_inconsistency("substitution cofactor exponent differs from |G| - k");
  MPoly p = d.divide_by_var_power(0, cofactor);

  // t -> |H| * t, then divide by the (constant) leading t-coefficient.
  std::vector<MPoly> images;
  images.reserve(vars + 1);
  images.push_back(t * Rat(static_cast<long>(h.members.size())));
  for (std::uint32_t i = 1; i <= vars; ++i)
    images.push_back(MPoly::variable(vars + 1, i));
  p = p.substitute(images);

  const MPoly lead = p.coeff_of_var_power(0, k);
  if (!lead.is_constant())
    throw internal_inconsistency("rescaled polynomial has a non-constant leading t-coefficient");
  p *= Rat(1) / lead.constant_value();

  return {std::move(p), cofactor, legend_with_t(class_legend(classes))};
}

}  // namespace symdet
