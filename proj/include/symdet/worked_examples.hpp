#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "symdet/coset_matrix.hpp"
#include "symdet/errors.hpp"
#include "symdet/group.hpp"
#include "symdet/mpoly.hpp"

namespace symdet {

// Published worked examples used as regression goldens: nine symmetrized
// group determinants quoted as factored polynomials, and the coefficient
// table of the projective-action eigenform for small primes. Shared between
// the `verify worked-examples` subcommand and the acceptance suite.

struct WorkedDeterminant {
  std::string name;
  FiniteGroup group;
  // Letters the quoted factorization is written in, mapped onto classes
  // 0..S-1 in order (some sources skip letters, e.g. {a,b,d,e,f}).
  std::vector<std::string> letters;
  // (factor text, exponent) pairs multiplying to the determinant.
  std::vector<std::pair<std::string, std::uint32_t>> factors;
};

inline MPoly expand_factors(const WorkedDeterminant& w) {
  MPoly out = MPoly::constant(static_cast<std::uint32_t>(w.letters.size()), Rat(1));
  for (const auto& [text, exponent] : w.factors)
    out = out * parse_poly(text, w.letters).pow(exponent);
  return out;
}

inline std::vector<WorkedDeterminant> worked_determinants() {
  const std::vector<std::string> ab = {"a", "b"};
  const std::vector<std::string> abc = {"a", "b", "c"};
  const std::vector<std::string> abcd = {"a", "b", "c", "d"};
  const std::vector<std::string> abcde = {"a", "b", "c", "d", "e"};
  const std::vector<std::string> abdef = {"a", "b", "d", "e", "f"};

  std::vector<WorkedDeterminant> out;
  out.push_back({"Z3", build_cyclic(3), ab, {{"a + 2*b", 1}, {"a - b", 2}}});
  out.push_back({"Z4",
                 build_cyclic(4),
                 abc,
                 {{"a + 2*b + c", 1}, {"a - 2*b + c", 1}, {"a - c", 2}}});
  out.push_back({"Z5",
                 build_cyclic(5),
                 abc,
                 {{"a + 2*b + 2*c", 1},
                  {"a^2 - a*b - b^2 - a*c + 3*b*c - c^2", 2}}});
  out.push_back({"Z6",
                 build_cyclic(6),
                 abcd,
                 {{"a + 2*b + 2*c + d", 1},
                  {"a + b - c - d", 2},
                  {"a - 2*b + 2*c - d", 1},
                  {"a - b - c + d", 2}}});
  out.push_back({"Z8",
                 build_cyclic(8),
                 abcde,
                 {{"a + 2*b + 2*c + 2*d + e", 1},
                  {"a - 2*c + e", 2},
                  {"a - 2*b + 2*c - 2*d + e", 1},
                  {"a^2 - 2*b^2 + 4*b*d - 2*d^2 - 2*a*e + e^2", 2}}});
  out.push_back({"D6",
                 build_dihedral(3),
                 abdef,
                 {{"a + 2*b + d + e + f", 1},
                  {"a + 2*b - d - e - f", 1},
                  {"a^2 - 2*a*b + b^2 - d^2 + d*e - e^2 + d*f + e*f - f^2", 2}}});
  out.push_back({"Q8",
                 build_quaternion(),
                 abcde,
                 {{"a + 2*b + 2*c + 2*d + e", 1},
                  {"a - e", 4},
                  {"a + 2*b - 2*c - 2*d + e", 1},
                  {"a - 2*b + 2*c - 2*d + e", 1},
                  {"a - 2*b - 2*c + 2*d + e", 1}}});
  out.push_back({"V4",
                 build_direct_sum({build_cyclic(2), build_cyclic(2)}),
                 abcd,
                 {{"a + b + c + d", 1},
                  {"a + b - c - d", 1},
                  {"a - b + c - d", 1},
                  {"a - b - c + d", 1}}});
  out.push_back({"Z3+Z3",
                 build_direct_sum({build_cyclic(3), build_cyclic(3)}),
                 abdef,
                 {{"a + 2*b + 2*d + 2*e + 2*f", 1},
                  {"-a + b + d + e - 2*f", 2},
                  {"a - b + 2*d - e - f", 2},
                  {"-a + b + d - 2*e + f", 2},
                  {"-a - 2*b + d + e + f", 2}}});
  return out;
}

// Checks one golden: the symmetrized group determinant must equal the
// expanded factorization both as a polynomial and byte-exactly in canonical
// form under the library's own variable names.
inline bool check_worked_determinant(const WorkedDeterminant& w) {
  const MPoly want = expand_factors(w);
  const MPoly got = sym_group_determinant(w.group);
  if (!(got == want)) return false;
  const std::vector<std::string> names =
      variable_names(static_cast<std::uint32_t>(w.letters.size()));
  return canonical_string(got, names) == canonical_string(want, names);
}

struct WorkedLambdaRow {
  std::uint32_t p;
  // Expected non-identity class coefficients, sorted ascending (the identity
  // class coefficient is always exactly 1).
  std::vector<long> other_coeffs;
};

inline std::vector<WorkedLambdaRow> worked_lambda_rows() {
  return {
      {5, {-1, -1, 1}},
      {7, {-1, -1, -1, 2}},
      {11, {-1, -1, -1, -1, -1, 2, 2}},
      {13, {-1, -1, -1, -1, -1, -1, 1, 2, 2}},
  };
}

inline std::vector<WorkedLambdaRow> worked_lambda_rows_extended() {
  return {
      {17, {-1, -1, -1, -1, -1, -1, -1, -1, 1, 2, 2, 2}},
      {19, {-1, -1, -1, -1, -1, -1, -1, -1, -1, 2, 2, 2, 2}},
  };
}

}  // namespace symdet
