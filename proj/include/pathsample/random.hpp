#pragma once

#include <array>
#include <cstdint>
#include <limits>

namespace pathsample {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

// Seedable xoshiro256++ stream. The same (seed, stream) pair always yields
// the same draw sequence, on any platform; distinct stream indices give
// decorrelated sequences for parallel workers.
class RandomSource {
 public:
  explicit RandomSource(std::uint64_t seed, std::uint64_t stream = 0) {
    std::uint64_t s = stream;
    std::uint64_t x = seed ^ splitmix64(s);
    for (auto& w : state_) w = splitmix64(x);
    if ((state_[0] | state_[1] | state_[2] | state_[3]) == 0) state_[0] = 1;
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  // Unbiased draw from [0, n). Lemire's multiply-shift with rejection; we do
  // not use std::uniform_int_distribution because its output is
  // implementation-defined and would break cross-platform reproducibility.
  std::uint64_t bounded(std::uint64_t n) {
    unsigned __int128 m = (unsigned __int128)next() * n;
    auto lo = (std::uint64_t)m;
    if (lo < n) {
      const std::uint64_t threshold = (0 - n) % n;
      while (lo < threshold) {
        m = (unsigned __int128)next() * n;
        lo = (std::uint64_t)m;
      }
    }
    return (std::uint64_t)(m >> 64);
  }

  // Uniform double in [0, 1), 53 random bits.
  double uniform() { return (double)(next() >> 11) * 0x1.0p-53; }

  // Independent seed for run index `index` (converge sweeps, worker pools).
  static std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t s = index;
    std::uint64_t x = seed ^ splitmix64(s);
    return splitmix64(x);
  }

  // UniformRandomBitGenerator interface.
  using result_type = std::uint64_t;
  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return std::numeric_limits<result_type>::max(); }
  result_type operator()() { return next(); }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::array<std::uint64_t, 4> state_;
};

}  // namespace pathsample
