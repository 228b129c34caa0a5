#pragma once
// Dense univariate polynomials over the rationals: Euclidean arithmetic,
// squarefree decomposition, and exact rational root finding.
//
// Root finding runs two independent routes. The divisor route clears
// denominators and enumerates candidate roots p/q from the integer
// factorizations of the outer coefficients; it applies whenever both
// factorizations finish and the candidate count stays under a cap. The
// isolation route brackets every real root with a Sturm chain, shrinks each
// bracket below 1/lc^2 (lc the integer leading coefficient), and verifies the
// simplest rational inside: a rational root's denominator divides lc, and an
// interval that narrow holds at most one rational that small, so a failed
// verification certifies the bracketed root irrational. Either way every
// reported root is exact, and `complete` only drops when the bracket budget
// for a gigantic leading coefficient runs out.

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "symdet/errors.hpp"
#include "symdet/mpoly.hpp"
#include "symdet/rational.hpp"

namespace symdet {

class UPoly {
 public:
  UPoly() = default;  // zero polynomial
  explicit UPoly(const Rat& c) {
    if (c != 0) coeffs_.push_back(c);
  }

  static UPoly variable() {
    UPoly p;
    p.coeffs_ = {Rat(0), Rat(1)};
    return p;
  }

  // coeffs[k] is the coefficient of t^k; trailing zeros are trimmed.
  static UPoly from_coeffs(std::vector<Rat> coeffs) {
    UPoly p;
    p.coeffs_ = std::move(coeffs);
    p.trim();
    return p;
  }

  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

  Rat coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rat(0);
  }

  const Rat& leading() const {
    if (coeffs_.empty())
      throw input_error("leading coefficient of the zero polynomial");
    return coeffs_.back();
  }

  const std::vector<Rat>& coeffs() const { return coeffs_; }

  friend UPoly operator+(const UPoly& a, const UPoly& b) {
    UPoly out;
    out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out.coeffs_[i] += b.coeffs_[i];
    out.trim();
    return out;
  }

  friend UPoly operator-(const UPoly& a, const UPoly& b) {
    UPoly out;
    out.coeffs_.resize(std::max(a.coeffs_.size(), b.coeffs_.size()), Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) out.coeffs_[i] += a.coeffs_[i];
    for (std::size_t i = 0; i < b.coeffs_.size(); ++i) out.coeffs_[i] -= b.coeffs_[i];
    out.trim();
    return out;
  }

  UPoly operator-() const {
    UPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
  }

  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return UPoly();
    UPoly out;
    out.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
        out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    out.trim();  // cross terms cannot cancel the top one, but stay uniform
    return out;
  }

  friend UPoly operator*(const UPoly& a, const Rat& s) {
    if (s == 0) return UPoly();
    UPoly out = a;
    for (auto& c : out.coeffs_) c *= s;
    return out;
  }
  friend UPoly operator*(const Rat& s, const UPoly& a) { return a * s; }

  friend bool operator==(const UPoly& a, const UPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const UPoly& a, const UPoly& b) { return !(a == b); }

  Rat evaluate(const Rat& x) const {
    Rat acc(0);
    for (std::size_t i = coeffs_.size(); i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  UPoly derivative() const {
    UPoly out;
    for (std::size_t k = 1; k < coeffs_.size(); ++k)
      out.coeffs_.push_back(coeffs_[k] * Rat(static_cast<long>(k)));
    out.trim();
    return out;
  }

  UPoly pow(std::uint32_t e) const {
    UPoly result(Rat(1));
    UPoly base = *this;
    for (; e != 0; e >>= 1) {
      if (e & 1u) result = result * base;
      if (e > 1) base = base * base;
    }
    return result;
  }

  // Euclidean division: a = q*b + r with deg r < deg b.
  static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b) {
    if (b.is_zero()) throw input_error("polynomial division by zero");
    UPoly q, r = a;
    const int db = b.degree();
    if (r.degree() >= db) q.coeffs_.assign(r.coeffs_.size() - db, Rat(0));
    while (r.degree() >= db) {
      const std::size_t shift = static_cast<std::size_t>(r.degree() - db);
      const Rat f = r.coeffs_.back() / b.coeffs_.back();
      q.coeffs_[shift] = f;
      for (int i = 0; i <= db; ++i)
        r.coeffs_[shift + static_cast<std::size_t>(i)] -= f * b.coeffs_[static_cast<std::size_t>(i)];
      r.trim();
    }
    q.trim();
    return {std::move(q), std::move(r)};
  }

  // Division that must leave no remainder; a nonzero remainder means the
  // caller's algebra went wrong, not that the input was malformed.
  static UPoly exact_divide(const UPoly& a, const UPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero())
      throw internal_inconsistency("univariate division left a remainder");
    return q;
  }

  UPoly monic() const {
    if (is_zero()) throw input_error("monic form of the zero polynomial");
    return *this * (Rat(1) / coeffs_.back());
  }

  MPoly to_mpoly(std::uint32_t arity, std::uint32_t var) const {
    if (var >= arity) throw input_error("variable index out of range");
    MPoly out(arity);
    Expts e(arity, 0);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      e[var] = static_cast<std::uint32_t>(k);
      out.add_term(e, coeffs_[k]);
    }
    return out;
  }

  // The inverse direction tolerates higher arity as long as only `var`
  // actually occurs.
  static UPoly from_mpoly(const MPoly& p, std::uint32_t var = 0) {
    if (var >= p.arity() && !p.is_constant())
      throw input_error("variable index out of range");
    UPoly out;
    for (const auto& [e, c] : p.terms()) {
      std::uint32_t k = 0;
      for (std::uint32_t i = 0; i < p.arity(); ++i) {
        if (e[i] == 0) continue;
        if (i != var)
          throw input_error("polynomial is not univariate in the chosen variable");
        k = e[i];
      }
      if (out.coeffs_.size() <= k) out.coeffs_.resize(k + 1, Rat(0));
      out.coeffs_[k] = c;
    }
    out.trim();
    return out;
  }

  std::string canonical_string(const std::string& var = "t") const {
    return symdet::canonical_string(to_mpoly(1, 0), {var});
  }

 private:
  std::vector<Rat> coeffs_;

  void trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  }
};

// Monic gcd by the Euclidean algorithm, normalizing each remainder to keep
// coefficient growth in check. gcd(0, 0) = 0.
inline UPoly gcd_monic(UPoly a, UPoly b) {
  while (!b.is_zero()) {
    UPoly r = UPoly::divmod(a, b).second;
    a = std::move(b);
    b = r.is_zero() ? UPoly() : r.monic();
  }
  return a.is_zero() ? a : a.monic();
}

// Yun's squarefree decomposition: f = lc * prod factor^multiplicity with the
// factors monic, squarefree, and pairwise coprime. Multiplicities ascend.
inline std::vector<std::pair<UPoly, std::uint32_t>> squarefree_decomposition(
    const UPoly& f) {
  if (f.is_zero())
    throw input_error("squarefree decomposition of the zero polynomial");
  std::vector<std::pair<UPoly, std::uint32_t>> out;
  if (f.degree() == 0) return out;

  const UPoly fm = f.monic();
  UPoly g = gcd_monic(fm, fm.derivative());
  UPoly b = UPoly::exact_divide(fm, g);
  UPoly c = UPoly::exact_divide(fm.derivative(), g);
  UPoly d = c - b.derivative();
  for (std::uint32_t i = 1; b.degree() > 0; ++i) {
    UPoly a = gcd_monic(b, d);
    b = UPoly::exact_divide(b, a);
    c = UPoly::exact_divide(d, a);
    d = c - b.derivative();
    if (a.degree() > 0) out.emplace_back(std::move(a), i);
  }

  UPoly check(Rat(f.leading()));
  for (const auto& [fac, mult] : out) check = check * fac.pow(mult);
  if (check != f)
    throw internal_inconsistency("squarefree factors fail to multiply back");
  return out;
}

enum class RootMethod { Auto, Divisors, Isolation };

struct RationalRootsResult {
  std::vector<Rat> roots;  // ascending, without multiplicity
  bool complete = true;    // false only if a route had to give up
};

namespace detail {

// Trial division to 1e5, then a primality certificate for what remains.
// Returns false if the leftover cofactor is composite (factorization failed).
inline bool factor_integer(mpz_class n, std::map<mpz_class, std::uint32_t>* out) {
  out->clear();
  if (n < 0) n = -n;
  if (n == 0) throw internal_inconsistency("factoring zero");
  for (mpz_class p = 2; p <= 100000 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++(*out)[p];
      n /= p;
    }
  }
  if (n == 1) return true;
  if (mpz_probab_prime_p(n.get_mpz_t(), 40) > 0) {
    ++(*out)[n];
    return true;
  }
  return false;
}

inline std::uint64_t divisor_count(const std::map<mpz_class, std::uint32_t>& f) {
  std::uint64_t n = 1;
  for (const auto& [p, e] : f) {
    n *= e + 1;
    if (n > (1u << 30)) return 1u << 30;  // clamp; caller compares to a cap
  }
  return n;
}

inline std::vector<mpz_class> divisors(const std::map<mpz_class, std::uint32_t>& f) {
  std::vector<mpz_class> out = {1};
  for (const auto& [p, e] : f) {
    const std::size_t base = out.size();
    mpz_class pk = 1;
    for (std::uint32_t k = 1; k <= e; ++k) {
      pk *= p;
      for (std::size_t i = 0; i < base; ++i) out.push_back(out[i] * pk);
    }
  }
  return out;
}

// Simplest rational (smallest denominator, then smallest numerator) in the
// closed interval [lo, hi], via the Stern-Brocot / continued fraction walk.
inline Rat simplest_in(const Rat& lo, const Rat& hi) {
  if (hi < lo) throw internal_inconsistency("empty interval");
  if (lo <= 0 && 0 <= hi) return Rat(0);
  if (hi < 0) return -simplest_in(-hi, -lo);
  // 0 < lo <= hi: peel off integer parts recursively.
  mpz_class fl;
  mpz_fdiv_q(fl.get_mpz_t(), lo.get_num_mpz_t(), lo.get_den_mpz_t());
  const Rat f(fl);
  if (f + 1 <= hi) return f + 1;
  if (lo == f) return lo;  // lo is an integer and hi < lo + 1
  const Rat tail = simplest_in(Rat(1) / (hi - f), Rat(1) / (lo - f));
  return f + Rat(1) / tail;
}

// Sign variation count of a Sturm chain at x, skipping zeros.
inline std::uint32_t sturm_variations(const std::vector<UPoly>& chain, const Rat& x) {
  std::uint32_t v = 0;
  int last = 0;
  for (const auto& p : chain) {
    const int s = sgn(p.evaluate(x));
    if (s == 0) continue;
    if (last != 0 && s != last) ++v;
    last = s;
  }
  return v;
}

inline std::vector<UPoly> sturm_chain(const UPoly& f) {
  std::vector<UPoly> chain = {f, f.derivative()};
  while (!chain.back().is_zero() && chain.back().degree() > 0) {
    UPoly r = UPoly::divmod(chain[chain.size() - 2], chain.back()).second;
    if (r.is_zero()) break;
    chain.push_back(-r);
  }
  return chain;
}

// All rational roots of a squarefree polynomial by real-root isolation.
inline void isolation_roots(UPoly work, RationalRootsResult* out) {
  const UPoly t = UPoly::variable();
  while (work.degree() >= 1) {
    if (work.degree() == 1) {
      out->roots.push_back(-work.coeff(0) / work.coeff(1));
      return;
    }

    // Integer leading coefficient after clearing denominators (content not
    // divided out: that only loosens the denominator bound below).
    mpz_class den_lcm = 1;
    for (const auto& c : work.coeffs())
      mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den_mpz_t());
    const Rat scaled_lead = work.leading() * Rat(den_lcm);
    const mpz_class lc = abs(mpz_class(scaled_lead.get_num()));
    const Rat lc_sq(mpz_class(lc * lc));

    // Cauchy bound: every real root lies strictly inside (-B, B).
    Rat maxratio(0);
    for (int i = 0; i < work.degree(); ++i) {
      const Rat r = rat_abs(work.coeff(static_cast<std::size_t>(i)) / work.leading());
      if (r > maxratio) maxratio = r;
    }
    const Rat bound = maxratio + 2;

    const std::vector<UPoly> chain = sturm_chain(work);
    // Queue of open intervals with nonzero endpoint values; count via V(lo)-V(hi).
    std::vector<std::pair<Rat, Rat>> queue = {{-bound, bound}}, isolated;
    bool split_root = false;
    while (!queue.empty()) {
      auto [lo, hi] = queue.back();
      queue.pop_back();
      const std::uint32_t n =
          sturm_variations(chain, lo) - sturm_variations(chain, hi);
      if (n == 0) continue;
      if (n == 1) {
        isolated.emplace_back(lo, hi);
        continue;
      }
      const Rat mid = (lo + hi) / 2;
      if (work.evaluate(mid) == 0) {
        // Landed exactly on a root: record it, deflate, restart isolation.
        out->roots.push_back(mid);
        work = UPoly::exact_divide(work, t - UPoly(mid));
        split_root = true;
        break;
      }
      queue.emplace_back(lo, mid);
      queue.emplace_back(mid, hi);
    }
    if (split_root) continue;

    for (auto& [lo, hi] : isolated) {
      bool found = false, gave_up = false;
      int iter = 0;
      while ((hi - lo) * lc_sq >= 1) {
        if (++iter > 20000) {
          gave_up = true;
          break;
        }
        const Rat mid = (lo + hi) / 2;
        if (work.evaluate(mid) == 0) {
          out->roots.push_back(mid);
          found = true;
          break;
        }
        if (sturm_variations(chain, lo) - sturm_variations(chain, mid) == 1)
          hi = mid;
        else
          lo = mid;
      }
      if (found) continue;
      if (gave_up) {
        out->complete = false;
        continue;
      }
      const Rat cand = simplest_in(lo, hi);
      if (lo < cand && cand < hi && work.evaluate(cand) == 0)
        out->roots.push_back(cand);
      // Otherwise the bracketed root is certifiably irrational: any rational
      // root's denominator divides lc, and the bracket is now too narrow to
      // hold two distinct rationals with denominators that small.
    }
    return;
  }
}

// Candidate enumeration from the factored outer coefficients. Returns false
// when a factorization fails or the candidate count exceeds the cap.
inline bool divisor_roots(const UPoly& f, RationalRootsResult* out) {
  // Clear denominators to a primitive integer polynomial.
  mpz_class lcm = 1;
  for (const auto& c : f.coeffs())
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
  std::vector<mpz_class> z;
  z.reserve(f.coeffs().size());
  for (const auto& c : f.coeffs()) {
    const Rat scaled = c * Rat(lcm);
    z.push_back(mpz_class(scaled.get_num()));
  }

  std::size_t low = 0;
  while (low < z.size() && z[low] == 0) ++low;
  if (low > 0) out->roots.push_back(Rat(0));
  if (low + 1 >= z.size()) return true;  // constant or pure power of t

  std::map<mpz_class, std::uint32_t> f0, fn;
  if (!factor_integer(z[low], &f0) || !factor_integer(z.back(), &fn)) return false;
  if (divisor_count(f0) * divisor_count(fn) > 1000000) return false;

  const std::vector<mpz_class> nums = divisors(f0), dens = divisors(fn);
  for (const auto& p : nums)
    for (const auto& q : dens) {
      mpz_class g;
      mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), q.get_mpz_t());
      if (g != 1) continue;  // reduced pairs only; others repeat a candidate
      const Rat cand(p, q);
      if (f.evaluate(cand) == 0) out->roots.push_back(cand);
      if (f.evaluate(-cand) == 0) out->roots.push_back(-cand);
    }
  return true;
}

}  // namespace detail

// Distinct rational roots. The divisor route is tried first (completeness
// guaranteed when it applies); the isolation route is the fallback and the
// only source of `complete = false`.
inline RationalRootsResult rational_roots(const UPoly& f,
                                          RootMethod method = RootMethod::Auto) {
  if (f.is_zero())
    throw input_error("every rational is a root of the zero polynomial");
  RationalRootsResult out;
  if (f.degree() == 0) return out;

  bool done = false;
  if (method != RootMethod::Isolation) {
    done = detail::divisor_roots(f, &out);
    if (!done && method == RootMethod::Divisors)
      throw input_error("divisor enumeration is infeasible for this polynomial");
  }
  if (!done) {
    out.roots.clear();
    UPoly sqfree(Rat(1));
    for (const auto& [fac, mult] : squarefree_decomposition(f)) sqfree = sqfree * fac;
    const int zero_order = [&] {
      int k = 0;
      while (sqfree.coeff(static_cast<std::size_t>(k)) == 0) ++k;
      return k;
    }();
    if (zero_order > 0) {
      out.roots.push_back(Rat(0));
      for (int i = 0; i < zero_order; ++i)
        sqfree = UPoly::exact_divide(sqfree, UPoly::variable());
    }
    detail::isolation_roots(std::move(sqfree), &out);
  }

  std::sort(out.roots.begin(), out.roots.end());
  out.roots.erase(std::unique(out.roots.begin(), out.roots.end()), out.roots.end());
  for (const auto& r : out.roots)
    if (f.evaluate(r) != 0) throw internal_inconsistency("reported root fails to vanish");
  return out;
}

}  // namespace symdet
