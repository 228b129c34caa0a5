#pragma once

#include <cctype>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symdet/errors.hpp"
#include "symdet/rational.hpp"

namespace symdet {

// exponent vector, one entry per variable
using Expts = std::vector<std::uint32_t>;

// Graded lexicographic term order: total degree first, ties broken
// lexicographically with the lowest-index variable most significant.
// a < b here means the monomial a is *smaller* in that order.
struct GradedLexLess {
  bool operator()(const Expts& a, const Expts& b) const {
    std::uint64_t da = 0, db = 0;
    for (auto e : a) da += e;
    for (auto e : b) db += e;
    if (da != db) return da < db;
    const std::size_t m = a.size() < b.size() ? a.size() : b.size();
    for (std::size_t i = 0; i < m; ++i)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  }
};

/* Sparse multivariate polynomial over Rat with a fixed variable count.
 * Terms live in a map ordered by GradedLexLess, so iteration in reverse gives
 * the canonical descending term order used for printing. The zero coefficient
 * never appears in the map. */
class MPoly {
 public:
  explicit MPoly(std::uint32_t arity) : arity_(arity) {}

  static MPoly constant(std::uint32_t arity, const Rat& c) {
    MPoly p(arity);
    if (c != 0) p.terms_.emplace(Expts(arity, 0), c);
    return p;
  }

  static MPoly variable(std::uint32_t arity, std::uint32_t index) {
    if (index >= arity) throw input_error("variable index out of range");
    MPoly p(arity);
    Expts e(arity, 0);
    e[index] = 1;
    p.terms_.emplace(std::move(e), Rat(1));
    return p;
  }

  std::uint32_t arity() const { return arity_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    if (terms_.empty()) return true;
    if (terms_.size() != 1) return false;
    for (auto e : terms_.begin()->first)
      if (e != 0) return false;
    return true;
  }

  // value of a constant polynomial; zero polynomial gives 0
  Rat constant_value() const {
    if (terms_.empty()) return Rat(0);
    if (!is_constant()) throw internal_inconsistency("constant_value on non-constant");
    return terms_.begin()->second;
  }

  // -1 for the zero polynomial
  int total_degree() const {
    if (terms_.empty()) return -1;
    std::uint64_t d = 0;
    for (auto e : terms_.rbegin()->first) d += e;
    return static_cast<int>(d);
  }

  int degree_in(std::uint32_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_)
      if (static_cast<int>(e[var]) > d) d = static_cast<int>(e[var]);
    return d;
  }

  int min_degree_in(std::uint32_t var) const {
    int d = -1;
    for (const auto& [e, c] : terms_)
      if (d < 0 || static_cast<int>(e[var]) < d) d = static_cast<int>(e[var]);
    return d;
  }

  const std::map<Expts, Rat, GradedLexLess>& terms() const { return terms_; }

  Rat coeff(const Expts& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  void add_term(const Expts& e, const Rat& c) {
    if (c == 0) return;
    auto [it, fresh] = terms_.emplace(e, c);
    if (!fresh) {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }

  MPoly& operator-=(const MPoly& o) {
    check_arity(o);
    for (const auto& [e, c] : o.terms_) add_term(e, Rat(-c));
    return *this;
  }

  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

  MPoly operator-() const {
    MPoly out(arity_);
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, Rat(-c));
    return out;
  }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    a.check_arity(b);
    MPoly out(a.arity_);
    Expts e(a.arity_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        for (std::uint32_t i = 0; i < a.arity_; ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }

  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly& operator*=(const Rat& s) {
    if (s == 0) {
      terms_.clear();
    } else {
      for (auto& [e, c] : terms_) c *= s;
    }
    return *this;
  }

  friend MPoly operator*(MPoly a, const Rat& s) { return a *= s; }
  friend MPoly operator*(const Rat& s, MPoly a) { return a *= s; }

  MPoly pow(std::uint32_t e) const {
    MPoly result = constant(arity_, Rat(1));
    MPoly base = *this;
    while (e > 0) {
      if (e & 1u) result *= base;
      base = e > 1 ? base * base : base;
      e >>= 1u;
    }
    return result;
  }

  bool operator==(const MPoly& o) const {
    return arity_ == o.arity_ && terms_ == o.terms_;
  }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

  Rat evaluate(const std::vector<Rat>& point) const {
    if (point.size() != arity_) throw input_error("evaluation point arity mismatch");
    Rat acc(0);
    for (const auto& [e, c] : terms_) {
      Rat term = c;
      for (std::uint32_t i = 0; i < arity_; ++i)
        if (e[i] != 0) term *= rat_pow(point[i], e[i]);
      acc += term;
    }
    return acc;
  }

  // total substitution: variable i is replaced by images[i]; all images share
  // one arity, which becomes the arity of the result
  MPoly substitute(const std::vector<MPoly>& images) const {
    if (images.size() != arity_) throw input_error("substitution arity mismatch");
    const std::uint32_t out_arity = arity_ == 0 ? 0 : images[0].arity();
    for (const auto& im : images)
      if (im.arity() != out_arity) throw input_error("substitution images disagree on arity");
    // per-variable power cache; pw[i][k] = images[i]^k
    std::vector<std::vector<MPoly>> pw(arity_);
    auto power = [&](std::uint32_t i, std::uint32_t k) -> const MPoly& {
      auto& col = pw[i];
      if (col.empty()) col.push_back(MPoly::constant(out_arity, Rat(1)));
      while (col.size() <= k) col.push_back(col.back() * images[i]);
      return col[k];
    };
    MPoly out(out_arity);
    for (const auto& [e, c] : terms_) {
      MPoly term = MPoly::constant(out_arity, c);
      for (std::uint32_t i = 0; i < arity_; ++i)
        if (e[i] != 0) term *= power(i, e[i]);
      out += term;
    }
    return out;
  }

  // exponent-folding variable identification: variable i of *this becomes
  // variable to[i] of the result, exponents of identified variables add
  MPoly rename_variables(const std::vector<std::uint32_t>& to,
                         std::uint32_t new_arity) const {
    if (to.size() != arity_) throw input_error("rename map arity mismatch");
    for (auto v : to)
      if (v >= new_arity) throw input_error("rename target out of range");
    MPoly out(new_arity);
    Expts ne(new_arity);
    for (const auto& [e, c] : terms_) {
      std::fill(ne.begin(), ne.end(), 0u);
      for (std::uint32_t i = 0; i < arity_; ++i) ne[to[i]] += e[i];
      out.add_term(ne, c);
    }
    return out;
  }

  // embed into a larger variable set, keeping existing indices
  MPoly lift_arity(std::uint32_t new_arity) const {
    if (new_arity < arity_) throw input_error("lift_arity cannot shrink");
    MPoly out(new_arity);
    for (const auto& [e, c] : terms_) {
      Expts ne(new_arity, 0);
      for (std::uint32_t i = 0; i < arity_; ++i) ne[i] = e[i];
      out.terms_.emplace(std::move(ne), c);
    }
    return out;
  }

  // terms whose exponent of `var` is exactly e, with that variable zeroed out
  MPoly coeff_of_var_power(std::uint32_t var, std::uint32_t e) const {
    MPoly out(arity_);
    for (const auto& [ex, c] : terms_) {
      if (ex[var] != e) continue;
      Expts ne = ex;
      ne[var] = 0;
      out.terms_.emplace(std::move(ne), c);
    }
    return out;
  }

  MPoly divide_by_var_power(std::uint32_t var, std::uint32_t e) const {
    MPoly out(arity_);
    for (const auto& [ex, c] : terms_) {
      if (ex[var] < e) throw inexact_division("monomial not divisible by variable power");
      Expts ne = ex;
      ne[var] -= e;
      out.terms_.emplace(std::move(ne), c);
    }
    return out;
  }

  // greatest term in graded-lex order; polynomial must be nonzero
  std::pair<Expts, Rat> leading_term() const {
    if (terms_.empty()) throw internal_inconsistency("leading_term of zero");
    return *terms_.rbegin();
  }

 private:
  void check_arity(const MPoly& o) const {
    if (arity_ != o.arity_) throw internal_inconsistency("polynomial arity mismatch");
  }

  std::uint32_t arity_;
  std::map<Expts, Rat, GradedLexLess> terms_;
};

namespace detail {
inline bool monomial_divides(const Expts& den, const Expts& num) {
  for (std::size_t i = 0; i < den.size(); ++i)
    if (den[i] > num[i]) return false;
  return true;
}
}  // namespace detail

inline bool try_exact_divide(const MPoly& num, const MPoly& den, MPoly* quotient) {
  if (num.arity() != den.arity())
    throw internal_inconsistency("polynomial arity mismatch in division");
  if (den.is_zero()) return false;
  MPoly q(num.arity());
  MPoly r = num;
  const auto [dle, dlc] = den.leading_term();
  // If den | num, the leading term of every intermediate remainder is
  // divisible by the leading term of den, so a single failure is conclusive.
  while (!r.is_zero()) {
    const auto [rle, rlc] = r.leading_term();
    if (!detail::monomial_divides(dle, rle)) return false;
    Expts me(num.arity());
    for (std::uint32_t i = 0; i < num.arity(); ++i) me[i] = rle[i] - dle[i];
    MPoly mono(num.arity());
    mono.add_term(me, rlc / dlc);
    q += mono;
    r -= mono * den;
  }
  if (quotient) *quotient = std::move(q);
  return true;
}

inline MPoly exact_divide(const MPoly& num, const MPoly& den) {
  MPoly q(num.arity());
  if (!try_exact_divide(num, den, &q))
    throw inexact_division("polynomial division is not exact");
  return q;
}

/* Canonical text form. Grammar, with terms in descending graded-lex order:
 *   poly  := "0" | term ((" + " | " - ") term)*
 *   term  := coeff | [coeff "*"] var ["^" exp] ("*" var ["^" exp])*
 * The leading term carries its sign directly ("-a + b"); later signs become
 * separators. Unit coefficients on non-constant terms are omitted. */
inline std::string canonical_string(const MPoly& p,
                                    const std::vector<std::string>& names) {
  if (names.size() != p.arity())
    throw input_error("legend size does not match polynomial arity");
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    const auto& [e, c] = *it;
    const bool negative = c < 0;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    const Rat mag = negative ? Rat(-c) : c;
    bool monomial_empty = true;
    for (auto ex : e)
      if (ex != 0) monomial_empty = false;
    std::string body;
    if (mag != 1 || monomial_empty) body = rat_to_string(mag);
    for (std::uint32_t i = 0; i < p.arity(); ++i) {
      if (e[i] == 0) continue;
      if (!body.empty()) body += "*";
      body += names[i];
      if (e[i] > 1) {
        body += "^";
        body += std::to_string(e[i]);
      }
    }
    out += body;
    first = false;
  }
  return out;
}

/* Parser for the same grammar, whitespace-tolerant. Accepts any term order
 * and repeated monomials (coefficients accumulate). */
inline MPoly parse_poly(const std::string& text,
                        const std::vector<std::string>& names) {
  const std::uint32_t arity = static_cast<std::uint32_t>(names.size());
  std::map<std::string, std::uint32_t> index;
  for (std::uint32_t i = 0; i < arity; ++i) index[names[i]] = i;

  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  };
  auto read_digits = [&]() -> std::string {
    skip_ws();
    if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos])))
      throw input_error("expected number at offset " + std::to_string(pos));
    std::string digits;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])))
      digits += text[pos++];
    return digits;
  };
  auto read_exponent = [&]() -> std::uint32_t {
    const std::string digits = read_digits();
    if (digits.size() > 6) throw input_error("exponent out of range");
    return static_cast<std::uint32_t>(std::stoul(digits));
  };
  auto read_name = [&]() -> std::string {
    std::string word;
    while (pos < text.size() &&
           (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
      word += text[pos++];
    return word;
  };

  MPoly out(arity);
  skip_ws();
  if (pos >= text.size()) throw input_error("empty polynomial text");
  bool first = true;
  while (true) {
    skip_ws();
    if (pos >= text.size()) break;
    int sign = 1;
    if (text[pos] == '+' || text[pos] == '-') {
      sign = text[pos] == '-' ? -1 : 1;
      ++pos;
      skip_ws();
    } else if (!first) {
      throw input_error("expected '+' or '-' at offset " + std::to_string(pos));
    }
    first = false;

    Rat coeff(1);
    bool saw_coeff = false;
    if (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      std::string num = read_digits();
      skip_ws();
      if (pos < text.size() && text[pos] == '/') {
        ++pos;
        num += "/" + read_digits();
      }
      coeff = rat_from_string(num);
      saw_coeff = true;
    }
    Expts e(arity, 0);
    bool saw_var = false;
    while (true) {
      skip_ws();
      std::size_t mark = pos;
      if (pos < text.size() && text[pos] == '*') {
        ++pos;
        skip_ws();
      } else if (saw_coeff || saw_var) {
        // canonical form separates factors with '*'; no '*' means term ended
        break;
      }
      if (pos >= text.size() ||
          !(std::isalpha(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        if (mark != pos) throw input_error("dangling '*' at offset " + std::to_string(mark));
        break;
      }
      const std::string word = read_name();
      auto hit = index.find(word);
      if (hit == index.end()) throw input_error("unknown variable '" + word + "'");
      std::uint32_t exp = 1;
      skip_ws();
      if (pos < text.size() && text[pos] == '^') {
        ++pos;
        exp = read_exponent();
      }
      e[hit->second] += exp;
      saw_var = true;
    }
    if (!saw_coeff && !saw_var)
      throw input_error("expected term at offset " + std::to_string(pos));
    out.add_term(e, sign < 0 ? Rat(-coeff) : coeff);
  }
  return out;
}

}  // namespace symdet
