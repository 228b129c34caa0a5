#pragma once

#include <cstdint>

namespace symdet {

inline constexpr std::uint64_t kDefaultSeed = 0xC0FFEE;

/* splitmix64. The std:: distributions are implementation-defined, which would
 * break byte-identical reports across toolchains, so sampling is done by hand
 * on top of a fixed 64-bit generator. */
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // uniform over [lo, hi], both inclusive; requires lo <= hi and a span that
  // fits in uint64. Modulo bias is irrelevant at the spans used here.
  std::int64_t uniform(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
    return static_cast<std::int64_t>(
        static_cast<std::uint64_t>(lo) + next() % span);
  }

  // decorrelated child stream, e.g. one per worker or per retry round
  Rng fork() { return Rng(next() ^ 0x5851f42d4c957f2dULL); }

 private:
  std::uint64_t state_;
};

}  // namespace symdet
