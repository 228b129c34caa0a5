#pragma once

#include <gmpxx.h>

#include <string>

#include "symdet/errors.hpp"

namespace symdet {

// Exact rational scalar. GMP's mpq_class keeps values canonical (coprime
// numerator/denominator, positive denominator) once canonicalize() has run;
// every constructor path below guarantees that.
using Rat = mpq_class;

inline Rat rat(long v) { return Rat(v); }

inline Rat rat(long num, long den) {
  if (den == 0) throw input_error("rational with zero denominator");
  Rat q(num, den);
  q.canonicalize();
  return q;
}

// Accepts "p", "-p", "p/q" with optional sign, base 10 only.
inline Rat rat_from_string(const std::string& s) {
  if (s.empty()) throw input_error("empty rational literal");
  bool slash = false;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char c = s[i];
    if (c == '-' && i == 0) continue;
    if (c == '/') {
      if (slash || i == 0 || i + 1 == s.size())
        throw input_error("bad rational literal: " + s);
      slash = true;
      continue;
    }
    if (c < '0' || c > '9') throw input_error("bad rational literal: " + s);
  }
  Rat q;
  if (q.set_str(s, 10) != 0) throw input_error("bad rational literal: " + s);
  if (q.get_den() == 0) throw input_error("rational with zero denominator: " + s);
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rat& q) { return q.get_str(); }

inline Rat rat_pow(const Rat& base, unsigned long e) {
  Rat out;
  mpz_pow_ui(out.get_num_mpz_t(), base.get_num_mpz_t(), e);
  mpz_pow_ui(out.get_den_mpz_t(), base.get_den_mpz_t(), e);
  return out;  // base canonical => powers coprime, no canonicalize needed
}

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }

inline bool rat_is_integer(const Rat& q) { return q.get_den() == 1; }

}  // namespace symdet
