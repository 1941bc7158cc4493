#pragma once

#include <cstdint>
#include <initializer_list>

namespace star2vec {

// splitmix64; used for seeding and for key hashing so that per-path
// generators are independent of worker scheduling.
struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }
};

// Order-sensitive mix of a seed with integer keys (node id, walk index, ...).
inline std::uint64_t mix_keys(std::uint64_t seed,
                              std::initializer_list<std::uint64_t> keys) {
  SplitMix64 sm(seed);
  std::uint64_t h = sm.next();
  for (std::uint64_t k : keys) {
    SplitMix64 inner(h ^ (k + 0x9e3779b97f4a7c15ULL));
    h = inner.next();
  }
  return h;
}

// xoshiro256++ with splitmix-derived state. All derived draws (u01, bounded)
// are implemented here so sampled streams do not depend on the standard
// library's distribution internals.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& w : s_) w = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform double in [0, 1).
  double u01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n); n >= 1. Unbiased via rejection.
  std::uint64_t bounded(std::uint64_t n) {
    const std::uint64_t threshold = (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

// Generator for walk (start, index) pairs; public so that reference
// implementations can reproduce the corpus byte for byte.
inline Rng path_rng(std::uint64_t seed, std::uint64_t start_node,
                    std::uint64_t walk_index) {
  return Rng(mix_keys(seed, {start_node, walk_index}));
}

}  // namespace star2vec
