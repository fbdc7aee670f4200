#pragma once
// Seeded deterministic PRNG for subsampling and grid sampling. splitmix64:
// same stream on every platform, unlike the standard distributions.

#include <cstdint>

namespace parab {

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // value in [0, n); n >= 1 (modulo bias is irrelevant at these scales)
  std::uint64_t below(std::uint64_t n) { return next() % n; }
};

inline std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  SplitMix64 g(a ^ (0x9e3779b97f4a7c15ULL + (b << 1)));
  g.next();
  return g.next();
}

}  // namespace parab
