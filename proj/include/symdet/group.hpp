#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "symdet/errors.hpp"
#include "symdet/rng.hpp"

namespace symdet {

/* Finite group on elements 0..n-1 with a full multiplication table. The
 * identity is element 0, always. Construction validates the table: identity
 * law, Latin square, two-sided inverses, and associativity (exhaustive up to
 * order 256, 10^4 seeded random triples above). */
class FiniteGroup {
 public:
  static constexpr std::uint32_t kIdentity = 0;

  static FiniteGroup from_table(std::vector<std::vector<std::uint32_t>> table,
                                std::vector<std::string> labels = {}) {
    FiniteGroup g;
    g.n_ = static_cast<std::uint32_t>(table.size());
    if (g.n_ == 0) throw input_error("group table is empty");
    g.mul_.resize(static_cast<std::size_t>(g.n_) * g.n_);
    for (std::uint32_t i = 0; i < g.n_; ++i) {
      if (table[i].size() != g.n_) throw input_error("group table is not square");
      for (std::uint32_t j = 0; j < g.n_; ++j) {
        if (table[i][j] >= g.n_) throw input_error("group table entry out of range");
        g.mul_[static_cast<std::size_t>(i) * g.n_ + j] = table[i][j];
      }
    }
    if (labels.empty()) {
      for (std::uint32_t i = 0; i < g.n_; ++i) g.labels_.push_back(std::to_string(i));
    } else {
      if (labels.size() != g.n_) throw input_error("label count does not match order");
      g.labels_ = std::move(labels);
    }
    g.validate();
    return g;
  }

  std::uint32_t order() const { return n_; }

  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return mul_[static_cast<std::size_t>(a) * n_ + b];
  }

  std::uint32_t inv(std::uint32_t a) const { return inv_[a]; }

  const std::string& label(std::uint32_t g) const { return labels_[g]; }

  std::uint32_t element_order(std::uint32_t g) const {
    std::uint32_t x = g, k = 1;
    while (x != kIdentity) {
      x = mul(x, g);
      ++k;
    }
    return k;
  }

  std::uint32_t power(std::uint32_t g, std::uint32_t e) const {
    std::uint32_t acc = kIdentity;
    for (std::uint32_t i = 0; i < e; ++i) acc = mul(acc, g);
    return acc;
  }

  bool is_abelian() const {
    for (std::uint32_t i = 0; i < n_; ++i)
      for (std::uint32_t j = i + 1; j < n_; ++j)
        if (mul(i, j) != mul(j, i)) return false;
    return true;
  }

 private:
  FiniteGroup() = default;

  void validate() {
    for (std::uint32_t g = 0; g < n_; ++g)
      if (mul(kIdentity, g) != g || mul(g, kIdentity) != g)
        throw input_error("element 0 is not a two-sided identity");
    std::vector<bool> seen(n_);
    for (std::uint32_t i = 0; i < n_; ++i) {
      std::fill(seen.begin(), seen.end(), false);
      for (std::uint32_t j = 0; j < n_; ++j) {
        if (seen[mul(i, j)]) throw input_error("group table row is not a permutation");
        seen[mul(i, j)] = true;
      }
      std::fill(seen.begin(), seen.end(), false);
      for (std::uint32_t j = 0; j < n_; ++j) {
        if (seen[mul(j, i)]) throw input_error("group table column is not a permutation");
        seen[mul(j, i)] = true;
      }
    }
    inv_.assign(n_, 0);
    for (std::uint32_t g = 0; g < n_; ++g) {
      bool found = false;
      for (std::uint32_t h = 0; h < n_; ++h) {
        if (mul(g, h) == kIdentity) {
          if (mul(h, g) != kIdentity)
            throw input_error("one-sided inverse in group table");
          inv_[g] = h;
          found = true;
          break;
        }
      }
      if (!found) throw input_error("element without inverse in group table");
    }
    if (n_ <= 256) {
      for (std::uint32_t a = 0; a < n_; ++a)
        for (std::uint32_t b = 0; b < n_; ++b)
          for (std::uint32_t c = 0; c < n_; ++c)
            if (mul(mul(a, b), c) != mul(a, mul(b, c)))
              throw input_error("group table is not associative");
    } else {
      Rng rng(0x5EEDu ^ n_);
      for (int t = 0; t < 10000; ++t) {
        const auto a = static_cast<std::uint32_t>(rng.uniform(0, n_ - 1));
        const auto b = static_cast<std::uint32_t>(rng.uniform(0, n_ - 1));
        const auto c = static_cast<std::uint32_t>(rng.uniform(0, n_ - 1));
        if (mul(mul(a, b), c) != mul(a, mul(b, c)))
          throw input_error("group table is not associative");
      }
    }
  }

  std::uint32_t n_ = 0;
  std::vector<std::uint32_t> mul_;
  std::vector<std::uint32_t> inv_;
  std::vector<std::string> labels_;
};

// ---- builders ------------------------------------------------------------

struct GroupSpec {
  enum class Family { Cyclic, DirectSum, Dihedral, Quaternion, Psl2, Table, Perm };
  Family family = Family::Cyclic;
  std::uint32_t n = 0;                                // cyclic order / dihedral rotation order
  std::uint32_t p = 0;                                // psl2 prime
  std::vector<GroupSpec> summands;                    // direct_sum
  std::vector<std::vector<std::uint32_t>> table;      // table family
  std::vector<std::string> labels;                    // optional with table
  std::vector<std::vector<std::uint32_t>> generators; // perm family, one-line images
};

inline FiniteGroup build_cyclic(std::uint32_t n) {
  if (n == 0) throw input_error("cyclic group of order 0");
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j) t[i][j] = (i + j) % n;
  return FiniteGroup::from_table(std::move(t));
}

inline FiniteGroup build_dihedral(std::uint32_t k) {
  if (k == 0) throw input_error("dihedral group needs rotation order >= 1");
  const std::uint32_t n = 2 * k;
  // element f*k+i represents s^f r^i; r^i s = s r^-i
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t f1 = 0; f1 < 2; ++f1)
    for (std::uint32_t i1 = 0; i1 < k; ++i1)
      for (std::uint32_t f2 = 0; f2 < 2; ++f2)
        for (std::uint32_t i2 = 0; i2 < k; ++i2) {
          const std::uint32_t f = f1 ^ f2;
          const std::uint32_t i = f2 == 0 ? (i1 + i2) % k : (i2 + k - i1 % k) % k;
          t[f1 * k + i1][f2 * k + i2] = f * k + i;
        }
  std::vector<std::string> labels;
  for (std::uint32_t f = 0; f < 2; ++f)
    for (std::uint32_t i = 0; i < k; ++i) {
      std::string base = f == 0 ? "" : "s";
      std::string rot = i == 0 ? "" : (i == 1 ? "r" : "r^" + std::to_string(i));
      std::string l = base.empty() ? rot : (rot.empty() ? base : base + "*" + rot);
      labels.push_back(l.empty() ? "1" : l);
    }
  return FiniteGroup::from_table(std::move(t), std::move(labels));
}

inline FiniteGroup build_quaternion() {
  // order: 1, i, j, k, -1, -i, -j, -k
  static const int unit_sign[4][4] = {
      {1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  static const std::uint32_t unit_prod[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  std::vector<std::vector<std::uint32_t>> t(8, std::vector<std::uint32_t>(8));
  for (std::uint32_t x = 0; x < 8; ++x)
    for (std::uint32_t y = 0; y < 8; ++y) {
      const std::uint32_t s1 = x / 4, u1 = x % 4, s2 = y / 4, u2 = y % 4;
      std::uint32_t s = (s1 + s2) % 2;
      if (unit_sign[u1][u2] < 0) s ^= 1u;
      t[x][y] = s * 4 + unit_prod[u1][u2];
    }
  return FiniteGroup::from_table(
      std::move(t), {"1", "i", "j", "k", "-1", "-i", "-j", "-k"});
}

namespace detail {

inline bool is_odd_prime(std::uint32_t p) {
  if (p < 3 || p % 2 == 0) return false;
  for (std::uint32_t d = 3; d * d <= p; d += 2)
    if (p % d == 0) return false;
  return true;
}

using Mat2 = std::array<std::uint32_t, 4>;

// scale by -1 if needed so the first nonzero entry lies in 1..(p-1)/2;
// picks one representative of {M, -M}
inline Mat2 psl2_normalize(Mat2 m, std::uint32_t p) {
  const std::uint32_t half = (p - 1) / 2;
  for (auto e : m) {
    if (e % p == 0) continue;
    if (e % p > half) {
      for (auto& x : m) x = (p - x % p) % p;
    } else {
      for (auto& x : m) x %= p;
    }
    return m;
  }
  throw internal_inconsistency("zero matrix in psl2 normalization");
}

struct Psl2Elements {
  std::vector<Mat2> mats;  // identity first, then lexicographic
  std::uint32_t p = 0;

  std::uint32_t index_of(const Mat2& m) const {
    const std::uint64_t key =
        ((static_cast<std::uint64_t>(m[0]) * p + m[1]) * p + m[2]) * p + m[3];
    return lookup.at(key);
  }

  std::unordered_map<std::uint64_t, std::uint32_t> lookup;
};

inline Psl2Elements psl2_elements(std::uint32_t p) {
  if (!is_odd_prime(p)) throw input_error("psl2 parameter must be an odd prime");
  // the dense multiplication table grows as |G|^2 = (p(p^2-1)/2)^2
  if (p > 23) throw input_error("psl2 supported for odd primes p <= 23");
  Psl2Elements out;
  out.p = p;
  std::vector<Mat2> mats;
  for (std::uint32_t a = 0; a < p; ++a)
    for (std::uint32_t b = 0; b < p; ++b)
      for (std::uint32_t c = 0; c < p; ++c)
        for (std::uint32_t d = 0; d < p; ++d) {
          if ((static_cast<std::uint64_t>(a) * d + 2ull * p * p -
               static_cast<std::uint64_t>(b) * c) % p != 1)
            continue;
          const Mat2 m = psl2_normalize({a, b, c, d}, p);
          if (m == Mat2{a, b, c, d}) mats.push_back(m);
        }
  std::sort(mats.begin(), mats.end());
  const Mat2 ident = {1, 0, 0, 1};
  mats.erase(std::find(mats.begin(), mats.end(), ident));
  mats.insert(mats.begin(), ident);
  out.mats = std::move(mats);
  for (std::uint32_t i = 0; i < out.mats.size(); ++i) {
    const Mat2& m = out.mats[i];
    const std::uint64_t key =
        ((static_cast<std::uint64_t>(m[0]) * p + m[1]) * p + m[2]) * p + m[3];
    out.lookup.emplace(key, i);
  }
  return out;
}

inline Mat2 psl2_mul(const Mat2& x, const Mat2& y, std::uint32_t p) {
  const std::uint64_t a = x[0], b = x[1], c = x[2], d = x[3];
  const std::uint64_t e = y[0], f = y[1], g = y[2], h = y[3];
  return psl2_normalize({static_cast<std::uint32_t>((a * e + b * g) % p),
                         static_cast<std::uint32_t>((a * f + b * h) % p),
                         static_cast<std::uint32_t>((c * e + d * g) % p),
                         static_cast<std::uint32_t>((c * f + d * h) % p)},
                        p);
}

inline std::string psl2_label(const Mat2& m) {
  return "[" + std::to_string(m[0]) + "," + std::to_string(m[1]) + ";" +
         std::to_string(m[2]) + "," + std::to_string(m[3]) + "]";
}

}  // namespace detail

inline FiniteGroup build_psl2(std::uint32_t p) {
  const detail::Psl2Elements els = detail::psl2_elements(p);
  const std::uint32_t n = static_cast<std::uint32_t>(els.mats.size());
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  std::vector<std::string> labels;
  for (std::uint32_t i = 0; i < n; ++i) labels.push_back(detail::psl2_label(els.mats[i]));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      t[i][j] = els.index_of(detail::psl2_mul(els.mats[i], els.mats[j], p));
  return FiniteGroup::from_table(std::move(t), std::move(labels));
}

inline FiniteGroup build_direct_sum(const std::vector<FiniteGroup>& parts) {
  if (parts.empty()) throw input_error("direct sum needs at least one summand");
  std::uint64_t total = 1;
  for (const auto& g : parts) {
    total *= g.order();
    if (total > 20000) throw input_error("direct sum order exceeds supported bound");
  }
  const std::uint32_t n = static_cast<std::uint32_t>(total);
  const std::size_t parts_n = parts.size();
  auto decompose = [&](std::uint32_t x) {
    std::vector<std::uint32_t> digits(parts_n);
    for (std::size_t i = parts_n; i-- > 0;) {
      digits[i] = x % parts[i].order();
      x /= parts[i].order();
    }
    return digits;
  };
  auto compose = [&](const std::vector<std::uint32_t>& digits) {
    std::uint32_t x = 0;
    for (std::size_t i = 0; i < parts_n; ++i) x = x * parts[i].order() + digits[i];
    return x;
  };
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t x = 0; x < n; ++x) {
    const auto dx = decompose(x);
    for (std::uint32_t y = 0; y < n; ++y) {
      auto dy = decompose(y);
      for (std::size_t i = 0; i < parts_n; ++i) dy[i] = parts[i].mul(dx[i], dy[i]);
      t[x][y] = compose(dy);
    }
  }
  std::vector<std::string> labels;
  for (std::uint32_t x = 0; x < n; ++x) {
    const auto dx = decompose(x);
    std::string l = "(";
    for (std::size_t i = 0; i < parts_n; ++i) {
      if (i) l += ",";
      l += parts[i].label(dx[i]);
    }
    labels.push_back(l + ")");
  }
  return FiniteGroup::from_table(std::move(t), std::move(labels));
}

inline FiniteGroup build_perm_group(const std::vector<std::vector<std::uint32_t>>& gens) {
  if (gens.empty()) throw input_error("perm family needs at least one generator");
  const std::size_t degree = gens[0].size();
  if (degree == 0) throw input_error("perm generator of degree 0");
  for (const auto& g : gens) {
    if (g.size() != degree) throw input_error("perm generators disagree on degree");
    std::vector<bool> seen(degree);
    for (auto v : g) {
      if (v >= degree || seen[v]) throw input_error("perm generator is not a permutation");
      seen[v] = true;
    }
  }
  std::vector<std::uint32_t> ident(degree);
  for (std::size_t i = 0; i < degree; ++i) ident[i] = static_cast<std::uint32_t>(i);
  std::map<std::vector<std::uint32_t>, std::uint32_t> index;
  std::vector<std::vector<std::uint32_t>> elems = {ident};
  index.emplace(ident, 0);
  auto compose = [&](const std::vector<std::uint32_t>& f,
                     const std::vector<std::uint32_t>& g) {
    std::vector<std::uint32_t> out(degree);
    for (std::size_t i = 0; i < degree; ++i) out[i] = f[g[i]];
    return out;
  };
  for (std::size_t head = 0; head < elems.size(); ++head) {
    const auto current = elems[head];
    for (const auto& g : gens) {
      auto next = compose(current, g);
      if (index.emplace(next, static_cast<std::uint32_t>(elems.size())).second) {
        elems.push_back(std::move(next));
        if (elems.size() > 20000)
          throw input_error("perm closure exceeds supported order");
      }
    }
  }
  // relabel in lexicographic order; the identity is lex-minimal so it stays 0
  std::sort(elems.begin(), elems.end());
  index.clear();
  for (std::uint32_t i = 0; i < elems.size(); ++i) index.emplace(elems[i], i);
  const std::uint32_t n = static_cast<std::uint32_t>(elems.size());
  std::vector<std::vector<std::uint32_t>> t(n, std::vector<std::uint32_t>(n));
  for (std::uint32_t i = 0; i < n; ++i)
    for (std::uint32_t j = 0; j < n; ++j)
      t[i][j] = index.at(compose(elems[i], elems[j]));
  std::vector<std::string> labels;
  for (const auto& e : elems) {
    std::string l = "[";
    for (std::size_t i = 0; i < degree; ++i) {
      if (i) l += ",";
      l += std::to_string(e[i]);
    }
    labels.push_back(l + "]");
  }
  return FiniteGroup::from_table(std::move(t), std::move(labels));
}

inline FiniteGroup build_group(const GroupSpec& spec) {
  switch (spec.family) {
    case GroupSpec::Family::Cyclic:
      return build_cyclic(spec.n);
    case GroupSpec::Family::Dihedral:
      return build_dihedral(spec.n);
    case GroupSpec::Family::Quaternion:
      return build_quaternion();
    case GroupSpec::Family::Psl2:
      return build_psl2(spec.p);
    case GroupSpec::Family::Table:
      return FiniteGroup::from_table(spec.table, spec.labels);
    case GroupSpec::Family::Perm:
      return build_perm_group(spec.generators);
    case GroupSpec::Family::DirectSum: {
      std::vector<FiniteGroup> parts;
      parts.reserve(spec.summands.size());
      for (const auto& s : spec.summands) parts.push_back(build_group(s));
      return build_direct_sum(parts);
    }
  }
  throw input_error("unknown group family");
}

}  // namespace symdet
