#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "symdet/errors.hpp"
#include "symdet/group.hpp"
#include "symdet/rng.hpp"

namespace symdet {

// Subgroup as a sorted member list; the parent group travels alongside in
// every operation so the struct stays a plain value.
struct Subgroup {
  std::vector<std::uint32_t> members;  // sorted ascending, contains 0

  std::uint32_t size() const { return static_cast<std::uint32_t>(members.size()); }

  bool contains(std::uint32_t g) const {
    return std::binary_search(members.begin(), members.end(), g);
  }
};

inline Subgroup subgroup_closure(const FiniteGroup& G,
                                 std::vector<std::uint32_t> generators,
                                 bool allow_empty = false) {
  for (auto g : generators)
    if (g >= G.order()) throw input_error("subgroup generator out of range");
  if (generators.empty() && !allow_empty)
    throw input_error("empty generator set (pass allow_empty to mean the trivial subgroup)");
  std::vector<bool> in(G.order(), false);
  std::vector<std::uint32_t> queue = {FiniteGroup::kIdentity};
  in[FiniteGroup::kIdentity] = true;
  for (auto g : generators)
    if (!in[g]) {
      in[g] = true;
      queue.push_back(g);
    }
  for (std::size_t head = 0; head < queue.size(); ++head)
    for (auto g : generators) {
      const std::uint32_t x = G.mul(queue[head], g);
      if (!in[x]) {
        in[x] = true;
        queue.push_back(x);
      }
    }
  Subgroup H;
  for (std::uint32_t g = 0; g < G.order(); ++g)
    if (in[g]) H.members.push_back(g);
  return H;
}

inline Subgroup subgroup_from_members(const FiniteGroup& G,
                                      std::vector<std::uint32_t> members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (members.empty()) throw input_error("subgroup member list is empty");
  for (auto g : members)
    if (g >= G.order()) throw input_error("subgroup member out of range");
  Subgroup H{members};
  if (!H.contains(FiniteGroup::kIdentity))
    throw input_error("subgroup member list lacks the identity");
  for (auto a : members)
    for (auto b : members)
      if (!H.contains(G.mul(a, b)))
        throw input_error("member list is not closed under multiplication");
  return H;
}

inline Subgroup trivial_subgroup(const FiniteGroup&) {
  return Subgroup{{FiniteGroup::kIdentity}};
}

inline Subgroup full_subgroup(const FiniteGroup& G) {
  Subgroup H;
  for (std::uint32_t g = 0; g < G.order(); ++g) H.members.push_back(g);
  return H;
}

/* Left cosets gH. Representatives are chosen greedily by minimal element
 * index, so reps[0] is the identity and reps is strictly increasing. */
struct CosetTable {
  std::vector<std::uint32_t> reps;
  std::vector<std::uint32_t> coset_of;  // size |G|

  std::uint32_t count() const { return static_cast<std::uint32_t>(reps.size()); }
};

inline CosetTable left_cosets(const FiniteGroup& G, const Subgroup& H) {
  CosetTable t;
  t.coset_of.assign(G.order(), UINT32_MAX);
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    if (t.coset_of[g] != UINT32_MAX) continue;
    const std::uint32_t c = t.count();
    t.reps.push_back(g);
    for (auto h : H.members) t.coset_of[G.mul(g, h)] = c;
    if (t.coset_of[g] != c)
      throw internal_inconsistency("coset enumeration failed to cover its representative");
  }
  if (t.count() * H.size() != G.order())
    throw internal_inconsistency("coset count violates Lagrange");
  return t;
}

/* Classes of the symmetrizing equivalence: g ~ g' iff g' lies in
 * H g H union H g^-1 H. Classes are numbered in order of their minimal
 * element, so class 0 is H itself. */
struct SymClassPartition {
  std::vector<std::vector<std::uint32_t>> classes;  // each sorted ascending
  std::vector<std::uint32_t> class_of;              // size |G|

  std::uint32_t count() const { return static_cast<std::uint32_t>(classes.size()); }
};

inline SymClassPartition sym_classes(const FiniteGroup& G, const Subgroup& H) {
  SymClassPartition part;
  part.class_of.assign(G.order(), UINT32_MAX);
  for (std::uint32_t g = 0; g < G.order(); ++g) {
    if (part.class_of[g] != UINT32_MAX) continue;
    const std::uint32_t c = part.count();
    std::vector<std::uint32_t> members;
    const std::uint32_t gi = G.inv(g);
    for (auto h1 : H.members)
      for (auto h2 : H.members) {
        for (std::uint32_t x : {G.mul(h1, G.mul(g, h2)), G.mul(h1, G.mul(gi, h2))}) {
          if (part.class_of[x] == UINT32_MAX) {
            part.class_of[x] = c;
            members.push_back(x);
          } else if (part.class_of[x] != c) {
            throw internal_inconsistency("symmetrized double cosets are not disjoint");
          }
        }
      }
    std::sort(members.begin(), members.end());
    part.classes.push_back(std::move(members));
  }
  if (part.classes[0] != H.members)
    throw internal_inconsistency("class 0 is not the subgroup itself");
  return part;
}

// Group action as one permutation of 0..degree-1 per group element.
struct PermutationRep {
  std::uint32_t degree = 0;
  std::vector<std::vector<std::uint32_t>> perm;  // perm[g][point]

  std::uint32_t fixed_points(std::uint32_t g) const {
    std::uint32_t f = 0;
    for (std::uint32_t x = 0; x < degree; ++x)
      if (perm[g][x] == x) ++f;
    return f;
  }
};

namespace detail {

inline void check_action_homomorphism(const FiniteGroup& G, const PermutationRep& rep,
                                      const char* what) {
  auto check_pair = [&](std::uint32_t a, std::uint32_t b) {
    const auto& pa = rep.perm[a];
    const auto& pb = rep.perm[b];
    const auto& pab = rep.perm[G.mul(a, b)];
    for (std::uint32_t x = 0; x < rep.degree; ++x)
      if (pab[x] != pa[pb[x]])
        throw internal_inconsistency(std::string(what) + ": action is not a homomorphism");
  };
  if (G.order() <= 60) {
    for (std::uint32_t a = 0; a < G.order(); ++a)
      for (std::uint32_t b = 0; b < G.order(); ++b) check_pair(a, b);
  } else {
    Rng rng(0xAC710Eu ^ G.order());
    for (int t = 0; t < 10000; ++t)
      check_pair(static_cast<std::uint32_t>(rng.uniform(0, G.order() - 1)),
                 static_cast<std::uint32_t>(rng.uniform(0, G.order() - 1)));
  }
  for (std::uint32_t x = 0; x < rep.degree; ++x)
    if (rep.perm[FiniteGroup::kIdentity][x] != x)
      throw internal_inconsistency(std::string(what) + ": identity does not act trivially");
}

}  // namespace detail

// g sends coset x H to (g x) H
inline PermutationRep coset_action(const FiniteGroup& G, const Subgroup& H) {
  const CosetTable t = left_cosets(G, H);
  PermutationRep rep;
  rep.degree = t.count();
  rep.perm.assign(G.order(), std::vector<std::uint32_t>(rep.degree));
  for (std::uint32_t g = 0; g < G.order(); ++g)
    for (std::uint32_t c = 0; c < rep.degree; ++c)
      rep.perm[g][c] = t.coset_of[G.mul(g, t.reps[c])];
  detail::check_action_homomorphism(G, rep, "coset action");
  return rep;
}

/* PSL(2,p) with its natural data: the group, the order-p unitriangular
 * subgroup generated by [1,1;0,1], and the Moebius action on the projective
 * line over Z_p. Projective points are indexed with infinity first, then the
 * residues 0..p-1 shifted by one. */
struct Psl2Setup {
  FiniteGroup group;
  Subgroup unipotent;
  PermutationRep action;
  std::uint32_t p = 0;
};

inline Psl2Setup psl2_projective_action(std::uint32_t p) {
  const detail::Psl2Elements els = detail::psl2_elements(p);
  Psl2Setup out{build_psl2(p), {}, {}, p};
  out.unipotent = subgroup_closure(out.group, {els.index_of({1, 1, 0, 1})});
  if (out.unipotent.size() != p)
    throw internal_inconsistency("unitriangular subgroup has wrong order");

  std::vector<std::uint32_t> inv_mod(p);  // multiplicative inverses, inv_mod[0] unused
  for (std::uint32_t x = 1; x < p; ++x)
    for (std::uint32_t y = 1; y < p; ++y)
      if (x * y % p == 1) {
        inv_mod[x] = y;
        break;
      }

  out.action.degree = p + 1;
  out.action.perm.assign(out.group.order(), std::vector<std::uint32_t>(p + 1));
  for (std::uint32_t g = 0; g < out.group.order(); ++g) {
    const detail::Mat2& m = els.mats[g];
    const std::uint64_t a = m[0], b = m[1], c = m[2], d = m[3];
    auto& pm = out.action.perm[g];
    pm[0] = c % p == 0 ? 0 : static_cast<std::uint32_t>(a * inv_mod[c % p] % p) + 1;
    for (std::uint32_t x = 0; x < p; ++x) {
      const std::uint32_t den = static_cast<std::uint32_t>((c * x + d) % p);
      pm[x + 1] = den == 0
                      ? 0
                      : static_cast<std::uint32_t>((a * x + b) % p * inv_mod[den] % p) + 1;
    }
  }
  detail::check_action_homomorphism(out.group, out.action, "projective line action");
  return out;
}

}  // namespace symdet
