// Specializes the symmetrized coset matrix of the 3-element cyclic group at a
// few rational points and prints the slopes that acquire positive filling
// rank. Every specialization produces a slope of rank at least two, and rank
// three appears exactly when the two linear eigenvalue forms collide.

#include <cstdio>
#include <vector>

#include "symdet/slope.hpp"

using namespace symdet;

namespace {

void show(const FillingSpec& spec) {
  std::printf("t = (a = %s, b = %s):\n", spec.values[0].get_str().c_str(),
              spec.values[1].get_str().c_str());
  const FillRankReport report = filling_ranks(spec);
  for (const auto& s : report.slopes)
    std::printf("  slope (%s, %s)  filling rank %u\n", s.slope.m.get_str().c_str(),
                s.slope.n.get_str().c_str(), s.dim);
  if (report.slopes.empty()) std::printf("  (no rational slopes)\n");
  std::printf("\n");
}

}  // namespace

int main() {
  const FiniteGroup z3 = build_cyclic(3);
  const Subgroup trivial = trivial_subgroup(z3);

  std::printf(
      "Filling ranks for specializations of the symmetrized coset matrix of\n"
      "the cyclic group of order 3 (classes: a = {0}, b = {1, 2}).\n"
      "Eigenvalue forms are a - b (rank 2) and a + 2b (rank 1), so every\n"
      "specialization carries a slope of rank >= 2; the forms coincide, and\n"
      "the rank jumps to 3, exactly when b = 0.\n\n");

  std::vector<std::vector<Rat>> points = {
      {Rat(0), Rat(1)},           // adjacency matrix of the triangle
      {Rat(1), Rat(0)},           // identity: coincident eigenvalues
      {Rat(2), Rat(-3)},          // a generic integer point
      {Rat(1) / 2, Rat(-1) / 6},  // a generic fractional point
      {Rat(5), Rat(5)},           // singular boundary matrix: slope (1, 0)
  };
  for (const auto& values : points) show(FillingSpec{z3, trivial, values});

  std::printf(
      "The same scan through the half-dimensional subspace route, for the\n"
      "pair (A = I, B = boundary matrix at a = 0, b = 1):\n");
  const FillingSpec spec{z3, trivial, {Rat(0), Rat(1)}};
  const SubspacePair u = subspace_pair(identity_matrix(3), boundary_matrix(spec));
  const SlopePolynomial p = slope_polynomial(u);
  std::printf("  slope polynomial: %s\n",
              canonical_string(p.poly, {"x", "y"}).c_str());
  for (const auto& s : slopes_with_positive_rank(u).slopes)
    std::printf("  slope (%s, %s)  rank %u\n", s.slope.m.get_str().c_str(),
                s.slope.n.get_str().c_str(), s.dim);
  return 0;
}
