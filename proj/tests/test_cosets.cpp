#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "symdet/cosets.hpp"
#include "symdet/rng.hpp"

using namespace symdet;

namespace {

// independent pairwise oracle: g ~ g' iff exists h, h' in H with
// g' = h g h' or g' = h g^-1 h'
bool sym_related(const FiniteGroup& G, const Subgroup& H, std::uint32_t g,
                 std::uint32_t gp) {
  for (auto h1 : H.members)
    for (auto h2 : H.members) {
      if (G.mul(h1, G.mul(g, h2)) == gp) return true;
      if (G.mul(h1, G.mul(G.inv(g), h2)) == gp) return true;
    }
  return false;
}

struct Pair {
  FiniteGroup G;
  Subgroup H;
  std::string name;
};

std::vector<Pair> partition_corpus() {
  std::vector<Pair> out;
  auto add = [&](FiniteGroup g, Subgroup h, std::string name) {
    out.push_back({std::move(g), std::move(h), std::move(name)});
  };
  for (std::uint32_t n : {2u, 3u, 4u, 5u, 6u, 8u, 12u}) {
    FiniteGroup G = build_cyclic(n);
    add(G, trivial_subgroup(G), "Z" + std::to_string(n) + "/1");
    add(G, full_subgroup(G), "Z" + std::to_string(n) + "/G");
    if (n % 2 == 0) add(G, subgroup_closure(G, {n / 2}), "Z" + std::to_string(n) + "/half");
  }
  {
    FiniteGroup G = build_dihedral(3);
    add(G, subgroup_closure(G, {3}), "D3/refl");
    add(G, subgroup_closure(G, {1}), "D3/rot");
    add(G, trivial_subgroup(G), "D3/1");
  }
  {
    FiniteGroup G = build_dihedral(6);
    add(G, subgroup_closure(G, {6}), "D6/refl");
    add(G, subgroup_closure(G, {2}), "D6/rot2");
  }
  {
    FiniteGroup G = build_quaternion();
    add(G, subgroup_closure(G, {4}), "Q8/center");
    add(G, subgroup_closure(G, {1}), "Q8/i");
    add(G, trivial_subgroup(G), "Q8/1");
  }
  {
    FiniteGroup G = build_direct_sum({build_cyclic(3), build_cyclic(3)});
    add(G, subgroup_closure(G, {3}), "Z3Z3/first");
    add(G, trivial_subgroup(G), "Z3Z3/1");
  }
  {
    Psl2Setup s = psl2_projective_action(3);
    add(s.group, s.unipotent, "PSL(2,3)/unipotent");
    add(s.group, trivial_subgroup(s.group), "PSL(2,3)/1");
  }
  {
    Psl2Setup s = psl2_projective_action(5);
    add(s.group, s.unipotent, "PSL(2,5)/unipotent");
  }
  {
    Psl2Setup s = psl2_projective_action(7);
    add(s.group, s.unipotent, "PSL(2,7)/unipotent");
  }
  return out;
}

}  // namespace

TEST_CASE("subgroup closure") {
  const FiniteGroup z6 = build_cyclic(6);
  CHECK(subgroup_closure(z6, {3}).members == std::vector<std::uint32_t>{0, 3});
  CHECK(subgroup_closure(z6, {2}).members == std::vector<std::uint32_t>{0, 2, 4});
  CHECK(subgroup_closure(z6, {5}).size() == 6);
  CHECK(subgroup_closure(z6, {}, true).members == std::vector<std::uint32_t>{0});
  CHECK_THROWS_AS(subgroup_closure(z6, {}), input_error);
  CHECK_THROWS_AS(subgroup_closure(z6, {9}), input_error);

  const Psl2Setup s5 = psl2_projective_action(5);
  CHECK(s5.unipotent.size() == 5);
  CHECK(s5.unipotent.contains(0));
}

TEST_CASE("subgroup from explicit members") {
  const FiniteGroup z4 = build_cyclic(4);
  CHECK(subgroup_from_members(z4, {0, 2}).size() == 2);
  CHECK(subgroup_from_members(z4, {2, 0, 2}).size() == 2);
  CHECK_THROWS_AS(subgroup_from_members(z4, {0, 1}), input_error);
  CHECK_THROWS_AS(subgroup_from_members(z4, {2}), input_error);
  CHECK_THROWS_AS(subgroup_from_members(z4, {}), input_error);
}

TEST_CASE("left cosets") {
  const FiniteGroup z6 = build_cyclic(6);
  const Subgroup h = subgroup_closure(z6, {3});
  const CosetTable t = left_cosets(z6, h);
  CHECK(t.reps == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(t.coset_of == std::vector<std::uint32_t>{0, 1, 2, 0, 1, 2});

  CHECK(left_cosets(z6, trivial_subgroup(z6)).count() == 6);
  CHECK(left_cosets(z6, full_subgroup(z6)).count() == 1);

  const Psl2Setup s5 = psl2_projective_action(5);
  CHECK(left_cosets(s5.group, trivial_subgroup(s5.group)).count() == 60);
  CHECK(left_cosets(s5.group, s5.unipotent).count() == 12);
}

TEST_CASE("symmetrizing classes, small exact cases") {
  const FiniteGroup z3 = build_cyclic(3);
  const auto p3 = sym_classes(z3, trivial_subgroup(z3));
  CHECK(p3.classes == std::vector<std::vector<std::uint32_t>>{{0}, {1, 2}});

  const FiniteGroup z5 = build_cyclic(5);
  const auto p5 = sym_classes(z5, trivial_subgroup(z5));
  CHECK(p5.classes == std::vector<std::vector<std::uint32_t>>{{0}, {1, 4}, {2, 3}});

  const auto pg = sym_classes(z5, full_subgroup(z5));
  CHECK(pg.count() == 1);
  CHECK(pg.classes[0].size() == 5);

  const FiniteGroup z6 = build_cyclic(6);
  const auto p6 = sym_classes(z6, subgroup_closure(z6, {3}));
  CHECK(p6.classes == std::vector<std::vector<std::uint32_t>>{{0, 3}, {1, 2, 4, 5}});
}

TEST_CASE("psl2(5) symmetrizing classes match the brute-force oracle") {
  const Psl2Setup s = psl2_projective_action(5);
  const auto part = sym_classes(s.group, s.unipotent);
  CHECK(part.count() == 4);
  for (std::uint32_t g = 0; g < 60; ++g)
    for (std::uint32_t gp = 0; gp < 60; ++gp)
      CHECK((part.class_of[g] == part.class_of[gp]) ==
            sym_related(s.group, s.unipotent, g, gp));
}

TEST_CASE("partition invariants across the corpus") {
  for (const auto& [G, H, name] : partition_corpus()) {
    INFO(name);
    const auto part = sym_classes(G, H);
    const auto cosets = left_cosets(G, H);

    CHECK(cosets.count() * H.size() == G.order());
    CHECK(part.classes[0] == H.members);

    // classes partition G and are numbered by minimal member
    std::size_t total = 0;
    std::uint32_t prev_min = 0;
    for (std::uint32_t c = 0; c < part.count(); ++c) {
      total += part.classes[c].size();
      if (c > 0) CHECK(part.classes[c][0] > prev_min);
      prev_min = part.classes[c][0];
      for (auto g : part.classes[c]) CHECK(part.class_of[g] == c);
    }
    CHECK(total == G.order());

    // class map is inversion- and H-translation-invariant
    Rng rng(0xC0FFEE);
    for (int t = 0; t < 200; ++t) {
      const auto g = static_cast<std::uint32_t>(rng.uniform(0, G.order() - 1));
      CHECK(part.class_of[g] == part.class_of[G.inv(g)]);
      const auto h1 = H.members[rng.uniform(0, H.size() - 1)];
      const auto h2 = H.members[rng.uniform(0, H.size() - 1)];
      CHECK(part.class_of[g] == part.class_of[G.mul(h1, G.mul(g, h2))]);
    }

    // trivial H: classes are {g, g^-1}
    if (H.size() == 1) {
      for (std::uint32_t g = 0; g < G.order(); ++g)
        CHECK(part.classes[part.class_of[g]].size() ==
              (G.inv(g) == g ? 1u : 2u));
    }
  }
}

TEST_CASE("coset action") {
  const FiniteGroup z6 = build_cyclic(6);
  const Subgroup h = subgroup_closure(z6, {3});
  const PermutationRep rep = coset_action(z6, h);
  CHECK(rep.degree == 3);
  CHECK(rep.perm[1] == std::vector<std::uint32_t>{1, 2, 0});
  // 3 lies in H, so it acts trivially on the cosets
  CHECK(rep.perm[3] == std::vector<std::uint32_t>{0, 1, 2});
  CHECK(rep.fixed_points(3) == 3);
  CHECK(rep.fixed_points(1) == 0);

  CHECK(coset_action(z6, full_subgroup(z6)).degree == 1);
  CHECK(coset_action(z6, trivial_subgroup(z6)).degree == 6);
}

TEST_CASE("projective line action") {
  const Psl2Setup s5 = psl2_projective_action(5);
  CHECK(s5.action.degree == 6);
  // the unipotent generator fixes infinity and 5-cycles the affine points
  const std::uint32_t u = s5.unipotent.members[1];
  bool found_generator = false;
  for (auto g : s5.unipotent.members) {
    if (g == 0) continue;
    CHECK(s5.action.perm[g][0] == 0);
    CHECK(s5.action.fixed_points(g) == 1);
    found_generator = true;
  }
  CHECK(found_generator);
  CHECK(s5.action.fixed_points(0) == 6);
  (void)u;

  const Psl2Setup s3 = psl2_projective_action(3);
  CHECK(s3.action.degree == 4);
  CHECK(s3.group.order() == 12);

  // every non-identity element of PSL(2,5) fixes at most 2 points
  for (std::uint32_t g = 1; g < s5.group.order(); ++g)
    CHECK(s5.action.fixed_points(g) <= 2);
}
