#pragma once

#include <cstdint>
#include <string_view>

// Pinned pseudo-random number generators.  The simulation results of this
// library are part of its interface: given the same seed, any build on any
// platform must produce bit-identical draws.  That rules out std::mt19937
// and std::uniform_real_distribution (the standard leaves distribution
// algorithms unspecified), so we fix the exact generators here:
//
//   * splitmix64 expands a 64-bit seed into generator state,
//   * xoshiro256** produces the raw 64-bit stream,
//   * uniforms take the top 53 bits, giving doubles in [0, 1).
//
// Each simulation replication r gets its own stream seeded from
// (seed XOR r), which makes replications independent of worker scheduling.

namespace ordanova {

struct SplitMix64 {
  std::uint64_t state;

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }
};

class Xoshiro256StarStar {
 public:
  explicit Xoshiro256StarStar(std::uint64_t seed) {
    SplitMix64 sm{seed};
    for (auto& word : s_) word = sm.next();
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[1] * 5, 7) * 9;
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform double in [0, 1) from the top 53 bits.
  double next_uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

// Stream for replication `rep` (0-based) of a simulation seeded with `seed`.
inline Xoshiro256StarStar replication_stream(std::uint64_t seed, std::uint64_t rep) {
  return Xoshiro256StarStar(seed ^ rep);
}

// Stable 64-bit hash (FNV-1a) for deriving per-task seeds from a base seed
// and a task tag, so unrelated simulation cells never share streams.
inline std::uint64_t derive_seed(std::uint64_t base_seed, std::string_view tag) {
  std::uint64_t h = 0xCBF29CE484222325ULL;
  for (unsigned char c : tag) {
    h ^= c;
    h *= 0x00000100000001B3ULL;
  }
  return base_seed ^ h;
}

}  // namespace ordanova
