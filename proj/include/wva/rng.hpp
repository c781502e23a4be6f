#pragma once

#include <cstdint>

namespace wva {

/// Counter-style splittable PRNG (splitmix64). Cheap to construct, so each
/// (trial, pixel) pair gets its own stream and draws are independent of
/// execution order.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  /// Uniform double in (0, 1).
  double uniform01() {
    // 53 random bits; +0.5 keeps the value strictly inside (0, 1).
    return (static_cast<double>(next() >> 11) + 0.5) * 0x1.0p-53;
  }

 private:
  std::uint64_t state_;
};

/// Avalanche-mix two words into a stream seed.
std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b);

/// Poisson sample with deterministic, platform-independent arithmetic.
/// Knuth inversion for small mean, Hormann's PTRS transformed rejection
/// for large mean.
std::uint64_t poisson_sample(SplitMix64& rng, double mean);

}  // namespace wva
