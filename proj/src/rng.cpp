#include "wva/rng.hpp"

#include <cmath>

namespace wva {

std::uint64_t mix_seed(std::uint64_t a, std::uint64_t b) {
  SplitMix64 s(a ^ (b * 0x94d049bb133111ebULL + 0x9e3779b97f4a7c15ULL));
  s.next();
  return s.next();
}

namespace {

std::uint64_t poisson_knuth(SplitMix64& rng, double mean) {
  const double floor_prob = std::exp(-mean);
  std::uint64_t k = 0;
  double p = rng.uniform01();
  while (p > floor_prob) {
    ++k;
    p *= rng.uniform01();
  }
  return k;
}

// PTRS transformed-rejection sampler (Hormann 1993), valid for mean >= 10.
std::uint64_t poisson_ptrs(SplitMix64& rng, double mean) {
  const double slam = std::sqrt(mean);
  const double llam = std::log(mean);
  const double b = 0.931 + 2.53 * slam;
  const double a = -0.059 + 0.02483 * b;
  const double inv_alpha = 1.1239 + 1.1328 / (b - 3.4);
  const double v_r = 0.9277 - 3.6224 / (b - 2.0);

  for (;;) {
    const double u = rng.uniform01() - 0.5;
    const double v = rng.uniform01();
    const double us = 0.5 - std::fabs(u);
    const double kf = std::floor((2.0 * a / us + b) * u + mean + 0.43);
    if (kf < 0.0) continue;
    if (us >= 0.07 && v <= v_r) return static_cast<std::uint64_t>(kf);
    if (us < 0.013 && v > us) continue;
    const double lhs = std::log(v * inv_alpha / (a / (us * us) + b));
    const double rhs = kf * llam - mean - std::lgamma(kf + 1.0);
    if (lhs <= rhs) return static_cast<std::uint64_t>(kf);
  }
}

}  // namespace

std::uint64_t poisson_sample(SplitMix64& rng, double mean) {
  if (!(mean > 0.0)) return 0;
  if (mean < 10.0) return poisson_knuth(rng, mean);
  return poisson_ptrs(rng, mean);
}

}  // namespace wva
