#pragma once

// Reproducible random number generation for the simulation harness.
//
// The generator is xoshiro256++ seeded through SplitMix64. Replication
// streams are derived by mixing a base seed with the replication index,
// so stream k is identical whether replications run serially or on
// parallel workers.

#include <cstdint>

namespace monohaz {

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

class Xoshiro256pp {
 public:
  explicit Xoshiro256pp(std::uint64_t seed) {
    SplitMix64 sm(seed);
    for (auto& word : s_) word = sm.next();
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

  // Uniform on [0,1) with 53 random bits; independent of any library
  // distribution implementation so output is stable across toolchains.
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }

  std::uint64_t s_[4];
};

// Stream seed for replication `index` under `base_seed`.
inline std::uint64_t stream_seed(std::uint64_t base_seed, std::uint64_t index) {
  SplitMix64 sm(base_seed);
  std::uint64_t root = sm.next();
  return root ^ (0xd1342543de82ef95ULL * (index + 1));
}

}  // namespace monohaz
