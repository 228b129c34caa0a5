#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cstdint>
#include <vector>

#include "symdet/repr.hpp"

using namespace symdet;

namespace {

std::vector<Rat> rats(std::initializer_list<long> xs) {
  std::vector<Rat> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

RatMatrix specialize_at(const PolyMatrix& m, const std::vector<Rat>& pt) {
  RatMatrix out(m.rows(), m.cols(), Rat(0));
  for (std::uint32_t i = 0; i < m.rows(); ++i)
    for (std::uint32_t j = 0; j < m.cols(); ++j)
      out.at(i, j) = m.at(i, j).evaluate(pt);
  return out;
}

}  // namespace

TEST_CASE("regular representation matches the group matrix") {
  {
    const MatrixRep one = regular_rep(build_cyclic(1));
    CHECK(one.dim == 1);
    CHECK(one.mats[0] == identity_matrix(1));
  }
  {
    const MatrixRep z2 = regular_rep(build_cyclic(2));
    CHECK(z2.mats[0] == identity_matrix(2));
    RatMatrix swap(2, 2, Rat(0));
    swap.at(0, 1) = swap.at(1, 0) = Rat(1);
    CHECK(z2.mats[1] == swap);
  }
  for (const FiniteGroup& g :
       {build_cyclic(4), build_dihedral(3), build_quaternion()}) {
    CHECK(rep_matrix(regular_rep(g)) == group_matrix(g));
  }
}

TEST_CASE("representation axioms hold on random pairs") {
  Rng rng(11);
  std::vector<MatrixRep> reps;
  reps.push_back(regular_rep(build_cyclic(6)));
  reps.push_back(regular_rep(build_dihedral(3)));
  reps.push_back(regular_rep(build_quaternion()));
  const Psl2Setup psl5 = psl2_projective_action(5);
  reps.push_back(perm_matrix_rep(psl5.group, psl5.action));
  {
    const FiniteGroup z4 = build_cyclic(4);
    reps.push_back(direct_sum_rep(
        scalar_rep(z4, rats({1, -1, 1, -1})), regular_rep(z4)));
  }
  for (const auto& rho : reps) {
    CHECK_NOTHROW(check_rep(rho, 1000, rng.next()));
    for (int t = 0; t < 5; ++t) {
      const auto g = static_cast<std::uint32_t>(
          rng.uniform(0, rho.group.order() - 1));
      CHECK(rank(rho.mats[g]) == rho.dim);
    }
  }
}

TEST_CASE("representation matrices collect variables by element and class") {
  const FiniteGroup z4 = build_cyclic(4);
  const MatrixRep triv = scalar_rep(z4, rats({1, 1, 1, 1}));

  MPoly all = MPoly::constant(4, Rat(0));
  for (std::uint32_t g = 0; g < 4; ++g) all = all + MPoly::variable(4, g);
  CHECK(rep_matrix(triv).at(0, 0) == all);

  // Symmetrized over the trivial subgroup: classes {0}, {1,3}, {2}.
  const Subgroup trivial = trivial_subgroup(z4);
  MPoly by_class = MPoly::variable(3, 0) + MPoly::variable(3, 1) * Rat(2) +
                   MPoly::variable(3, 2);
  CHECK(sym_rep_matrix(triv, trivial).at(0, 0) == by_class);

  // Direct sums of representations give block-diagonal matrices.
  const MatrixRep sign = scalar_rep(z4, rats({1, -1, 1, -1}));
  const MatrixRep sum = direct_sum_rep(triv, sign);
  const PolyMatrix m = rep_matrix(sum);
  CHECK(m.at(0, 0) == rep_matrix(triv).at(0, 0));
  CHECK(m.at(1, 1) == rep_matrix(sign).at(0, 0));
  CHECK(m.at(0, 1).is_zero());
  CHECK(m.at(1, 0).is_zero());

  // Determinants multiply across direct sums.
  const MatrixRep reg2 = regular_rep(build_cyclic(2));
  const FiniteGroup z2 = build_cyclic(2);
  const MatrixRep sgn2 = scalar_rep(z2, rats({1, -1}));
  const MatrixRep both = direct_sum_rep(reg2, sgn2);
  CHECK(det_bareiss(rep_matrix(both)) ==
        det_bareiss(rep_matrix(reg2)) * det_bareiss(rep_matrix(sgn2)));
  const MatrixRep dbl = direct_sum_rep(sgn2, sgn2);
  CHECK(det_bareiss(rep_matrix(dbl)) ==
        det_bareiss(rep_matrix(sgn2)) * det_bareiss(rep_matrix(sgn2)));
}

TEST_CASE("fixed projectors count orbits") {
  const FiniteGroup z4 = build_cyclic(4);
  const MatrixRep reg4 = regular_rep(z4);
  {
    const Projector p = fixed_projector(reg4, trivial_subgroup(z4));
    CHECK(p.matrix == identity_matrix(4));
    CHECK(p.rank == 4);
  }
  {
    const Projector p = fixed_projector(reg4, subgroup_from_members(z4, {0, 2}));
    CHECK(p.rank == 2);
  }
  {
    const Psl2Setup s = psl2_projective_action(5);
    const MatrixRep rho = perm_matrix_rep(s.group, s.action);
    const Projector p = fixed_projector(rho, s.unipotent);
    CHECK(p.rank == 2);  // orbits on the projective line: infinity + the rest
  }
}

TEST_CASE("symbolic rank of the symmetrized representation matrix") {
  const FiniteGroup z5 = build_cyclic(5);
  CHECK(sym_rank(regular_rep(z5), trivial_subgroup(z5)) == 5);

  const FiniteGroup z6 = build_cyclic(6);
  CHECK(sym_rank(regular_rep(z6), subgroup_from_members(z6, {0, 3})) == 3);

  const Psl2Setup s5 = psl2_projective_action(5);
  CHECK(sym_rank(perm_matrix_rep(s5.group, s5.action), s5.unipotent) == 2);

  // Across a corpus of (group, subgroup, representation) triples the symbolic
  // rank always equals the orbit count of the subgroup on the permutation
  // basis, which is the projector rank.
  struct Triple {
    FiniteGroup g;
    Subgroup h;
  };
  std::vector<Triple> corpus;
  {
    const FiniteGroup z4 = build_cyclic(4);
    corpus.push_back({z4, trivial_subgroup(z4)});
    corpus.push_back({z4, subgroup_from_members(z4, {0, 2})});
    corpus.push_back({z4, subgroup_from_members(z4, {0, 1, 2, 3})});
    corpus.push_back({z6, trivial_subgroup(z6)});
    corpus.push_back({z6, subgroup_from_members(z6, {0, 3})});
    corpus.push_back({z6, subgroup_from_members(z6, {0, 2, 4})});
    const FiniteGroup d6 = build_dihedral(3);
    corpus.push_back({d6, trivial_subgroup(d6)});
    corpus.push_back({d6, subgroup_from_members(d6, {0, 3})});
    corpus.push_back({d6, subgroup_from_members(d6, {0, 1, 2})});
    const FiniteGroup q8 = build_quaternion();
    corpus.push_back({q8, trivial_subgroup(q8)});
    corpus.push_back({q8, subgroup_from_members(q8, {0, 4})});
    corpus.push_back({q8, subgroup_from_members(q8, {0, 1, 4, 5})});
    const FiniteGroup v4 = build_direct_sum({build_cyclic(2), build_cyclic(2)});
    corpus.push_back({v4, trivial_subgroup(v4)});
    corpus.push_back({v4, subgroup_from_members(v4, {0, 1})});
    const FiniteGroup z8 = build_cyclic(8);
    corpus.push_back({z8, trivial_subgroup(z8)});
    corpus.push_back({z8, subgroup_from_members(z8, {0, 4})});
    corpus.push_back({z8, subgroup_from_members(z8, {0, 2, 4, 6})});
    const FiniteGroup z33 = build_direct_sum({build_cyclic(3), build_cyclic(3)});
    corpus.push_back({z33, trivial_subgroup(z33)});
    corpus.push_back({z33, subgroup_closure(z33, {1})});
    const FiniteGroup z12 = build_cyclic(12);
    corpus.push_back({z12, subgroup_from_members(z12, {0, 6})});
  }
  CHECK(corpus.size() == 20);
  for (const auto& [g, h] : corpus) {
    const MatrixRep reg = regular_rep(g);
    const std::uint32_t r = sym_rank(reg, h);
    CHECK(r == fixed_projector(reg, h).rank);
    CHECK(r == g.order() / h.size());  // orbits of right translation
  }
}

TEST_CASE("trace eigenforms for rank-one projectors") {
  const FiniteGroup z4 = build_cyclic(4);
  {
    // Trivial representation with H = G: the single class collects |G|.
    const MatrixRep triv = scalar_rep(z4, rats({1, 1, 1, 1}));
    const Subgroup whole = subgroup_from_members(z4, {0, 1, 2, 3});
    const LinearForm f = trace_eigenform(triv, whole);
    CHECK(f.coeffs == rats({4}));
  }
  {
    const FiniteGroup z2 = build_cyclic(2);
    const MatrixRep sign = scalar_rep(z2, rats({1, -1}));
    const LinearForm f = trace_eigenform(sign, trivial_subgroup(z2));
    CHECK(f.coeffs == rats({1, -1}));
  }
  CHECK_THROWS_AS(trace_eigenform(regular_rep(z4), trivial_subgroup(z4)),
                  input_error);

  // Where the projector has rank one, the trace form is an eigenvalue of the
  // symmetrized representation matrix at every specialization.
  struct Case {
    MatrixRep rho;
    Subgroup h;
  };
  const FiniteGroup z6 = build_cyclic(6);
  const FiniteGroup z2 = build_cyclic(2);
  std::vector<Case> cases;
  cases.push_back({scalar_rep(z4, rats({1, 1, 1, 1})),
                   subgroup_from_members(z4, {0, 1, 2, 3})});
  cases.push_back({scalar_rep(z2, rats({1, -1})), trivial_subgroup(z2)});
  cases.push_back({scalar_rep(z6, rats({1, 1, 1, 1, 1, 1})),
                   subgroup_from_members(z6, {0, 2, 4})});
  cases.push_back({regular_rep(z6), subgroup_from_members(z6, {0, 1, 2, 3, 4, 5})});
  Rng rng(555);
  for (const auto& c : cases) {
    REQUIRE(fixed_projector(c.rho, c.h).rank == 1);
    const LinearForm f = trace_eigenform(c.rho, c.h);
    const PolyMatrix sym = sym_rep_matrix(c.rho, c.h);
    for (int probe = 0; probe < 5; ++probe) {
      std::vector<Rat> pt(f.coeffs.size());
      for (auto& x : pt) x = Rat(rng.uniform(-50, 50));
      RatMatrix sp = specialize_at(sym, pt);
      Rat lambda(0);
      for (std::size_t s = 0; s < pt.size(); ++s) lambda += f.coeffs[s] * pt[s];
      for (std::uint32_t i = 0; i < sp.rows(); ++i) sp.at(i, i) -= lambda;
      CHECK(nullity(sp) >= 1);
    }
  }
}

TEST_CASE("projective-line eigenforms match the published rows") {
  struct Row {
    std::uint32_t p;
    std::vector<long> multiset;  // non-identity coefficients, sorted
  };
  const std::vector<Row> rows = {
      {5, {-1, -1, 1}},
      {7, {-1, -1, -1, 2}},
      {11, {-1, -1, -1, -1, -1, 2, 2}},
      {13, {-1, -1, -1, -1, -1, -1, 1, 2, 2}},
  };
  for (const auto& row : rows) {
    const Psl2Lambda lam = psl2_lambda(row.p);
    CHECK(lam.multiplicity_bound == row.p);
    REQUIRE(!lam.form.coeffs.empty());
    CHECK(lam.form.coeffs[0] == 1);
    std::vector<Rat> rest(lam.form.coeffs.begin() + 1, lam.form.coeffs.end());
    std::sort(rest.begin(), rest.end());
    std::vector<Rat> expected;
    for (long c : row.multiset) expected.emplace_back(c);
    CHECK(rest == expected);
  }
}

TEST_CASE("projective-line eigenforms verify on the coset matrix") {
  Rng rng(808);
  for (std::uint32_t p : {3u, 5u, 7u, 11u, 13u}) {
    const Psl2Setup setup = psl2_projective_action(p);
    const Psl2Lambda lam = psl2_lambda(p);
    const SymCosetSystem sys = sym_coset_matrix(setup.group, setup.unipotent);
    REQUIRE(lam.form.coeffs.size() == sys.legend.names.size());
    for (int probe = 0; probe < 5; ++probe) {
      std::vector<Rat> pt(lam.form.coeffs.size());
      for (auto& x : pt) x = Rat(rng.uniform(-99, 99));
      RatMatrix sp = specialize_at(sys.matrix, pt);
      Rat lambda(0);
      for (std::size_t s = 0; s < pt.size(); ++s)
        lambda += lam.form.coeffs[s] * pt[s];
      for (std::uint32_t i = 0; i < sp.rows(); ++i) sp.at(i, i) -= lambda;
      CHECK(nullity(sp) >= p);
    }
  }
}

TEST_CASE("character products agree with exact abelian determinants") {
  CHECK(abelian_det_crosscheck(build_cyclic(2), {3, 1}));
  CHECK(abelian_det_crosscheck(build_cyclic(3), {1, 0, 0}));

  Rng rng(321);
  for (const FiniteGroup& g :
       {build_cyclic(6), build_cyclic(4),
        build_direct_sum({build_cyclic(2), build_cyclic(2)}),
        build_direct_sum({build_cyclic(2), build_cyclic(4)})}) {
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<long> pt(g.order());
      for (auto& c : pt) c = rng.uniform(-9, 9);
      CHECK(abelian_det_crosscheck(g, pt, 1e-9));
    }
  }

  CHECK_THROWS_AS(abelian_det_crosscheck(build_dihedral(3), {1, 0, 0, 0, 0, 0}),
                  input_error);
  CHECK_THROWS_AS(abelian_det_crosscheck(build_cyclic(3), {1, 0}), input_error);
}
