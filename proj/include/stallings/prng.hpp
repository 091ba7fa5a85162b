#pragma once

// Deterministic PRNG used by the randomized harness and the fold-order
// shuffle hook. Self-contained so that identical seeds give identical
// streams on every platform and standard library.

#include <cstdint>

namespace stallings {

inline constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += kGolden);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

struct SplitMix64 {
  std::uint64_t state;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() { return splitmix64(state); }

  // Uniform in [0, n), n >= 1; rejection sampling, no modulo bias.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
    std::uint64_t r;
    do {
      r = next();
    } while (r >= limit);
    return r % n;
  }

  bool coin() { return (next() & 1u) != 0; }
};

/// Per-trial seed derived from (master seed, trial index); trial streams
/// are independent of execution order and thread layout.
inline std::uint64_t trial_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t s = master + kGolden * (index + 1);
  return splitmix64(s);
}

}  // namespace stallings
