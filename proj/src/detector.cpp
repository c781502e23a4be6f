#include "wva/detector.hpp"

#include <algorithm>
#include <cmath>

#include "wva/errors.hpp"
#include "wva/parallel.hpp"
#include "wva/rng.hpp"

namespace wva {

DetectorModel default_detector(const SpectralProfile& profile, double photon_budget) {
  DetectorModel model;
  model.range_low = profile.omega0 - 4.0 * profile.delta;
  model.range_high = profile.omega0 + 4.0 * profile.delta;
  model.resolution_sigma = profile.delta / 50.0;
  model.photon_budget = photon_budget;
  return model;
}

namespace {

void validate(const DetectorModel& model) {
  if (model.n_pixels < 8) {
    throw DetectorMisconfiguredError("detector needs at least 8 pixels");
  }
  if (!(model.range_low < model.range_high)) {
    throw DetectorMisconfiguredError("detector range_low must be below range_high");
  }
  if (!(model.resolution_sigma >= 0.0)) {
    throw DetectorMisconfiguredError("resolution_sigma must be nonnegative");
  }
  if (!(model.photon_budget > 0.0)) {
    throw DetectorMisconfiguredError("photon_budget must be positive");
  }
}

// Discrete Gaussian response applied on the fine grid. Kernel is truncated
// at 6 sigma and renormalized; edges are zero-padded.
std::vector<double> convolve_response(const SpectralGrid& spectrum, double sigma) {
  const auto w = spectrum.weights();
  std::vector<double> out(w.begin(), w.end());
  if (sigma <= 0.0) return out;

  const double h = spectrum.bin_width();
  const auto half = static_cast<std::ptrdiff_t>(std::ceil(6.0 * sigma / h));
  if (half == 0) return out;
  std::vector<double> kernel(static_cast<std::size_t>(2 * half + 1));
  double kernel_sum = 0.0;
  for (std::ptrdiff_t k = -half; k <= half; ++k) {
    const double x = static_cast<double>(k) * h / sigma;
    const double v = std::exp(-0.5 * x * x);
    kernel[static_cast<std::size_t>(k + half)] = v;
    kernel_sum += v;
  }
  for (double& v : kernel) v /= kernel_sum;

  const auto n = static_cast<std::ptrdiff_t>(w.size());
  par::for_each_index(w.size(), [&](std::size_t i) {
    const auto center = static_cast<std::ptrdiff_t>(i);
    const std::ptrdiff_t lo = std::max<std::ptrdiff_t>(-half, -center);
    const std::ptrdiff_t hi = std::min<std::ptrdiff_t>(half, n - 1 - center);
    double acc = 0.0;
    for (std::ptrdiff_t k = lo; k <= hi; ++k) {
      acc += kernel[static_cast<std::size_t>(k + half)] *
             w[static_cast<std::size_t>(center + k)];
    }
    out[i] = acc;
  });
  return out;
}

}  // namespace

NoisySpectrum detect(const SpectralGrid& spectrum, double postselection_probability,
                     const DetectorModel& model, std::uint64_t seed,
                     bool sample_counts) {
  validate(model);
  if (!(postselection_probability >= 0.0) || !(postselection_probability <= 1.0)) {
    throw InvalidParameterError("detect: postselection probability must lie in [0, 1]");
  }

  const std::vector<double> blurred = convolve_response(spectrum, model.resolution_sigma);

  NoisySpectrum frame;
  frame.seed = seed;
  frame.sampled = sample_counts;
  frame.pixel_centers.resize(model.n_pixels);
  const double pixel_width =
      (model.range_high - model.range_low) / static_cast<double>(model.n_pixels);
  for (std::size_t p = 0; p < model.n_pixels; ++p) {
    frame.pixel_centers[p] =
        model.range_low + (static_cast<double>(p) + 0.5) * pixel_width;
  }

  // Rebin the blurred fine-grid mass into pixels. The alignment offset moves
  // the light, not the pixel scale.
  std::vector<double> pixel_mass(model.n_pixels, 0.0);
  double total_mass = 0.0;
  double clipped = 0.0;
  for (std::size_t i = 0; i < spectrum.size(); ++i) {
    const double mass = blurred[i];
    total_mass += mass;
    const double omega = spectrum.omega(i) + model.alignment_offset;
    const double pos = (omega - model.range_low) / pixel_width;
    if (pos < 0.0 || pos >= static_cast<double>(model.n_pixels)) {
      clipped += mass;
      continue;
    }
    pixel_mass[static_cast<std::size_t>(pos)] += mass;
  }

  frame.clipped_fraction = total_mass > 0.0 ? clipped / total_mass : 0.0;
  if (frame.clipped_fraction > 0.5) {
    throw DetectorMisconfiguredError(
        "detect: more than 50% of the spectrum lies outside the detector range");
  }
  frame.range_warning = frame.clipped_fraction > 0.01;

  const double scale = model.photon_budget * postselection_probability;
  frame.counts.resize(model.n_pixels);
  for (std::size_t p = 0; p < model.n_pixels; ++p) {
    frame.counts[p] = scale * pixel_mass[p];
  }
  frame.sampled = false;
  if (sample_counts) return sample_poisson(frame, seed);
  return frame;
}

NoisySpectrum sample_poisson(const NoisySpectrum& expected, std::uint64_t seed) {
  NoisySpectrum frame = expected;
  frame.seed = seed;
  frame.sampled = true;
  par::for_each_index(frame.counts.size(), [&](std::size_t p) {
    SplitMix64 rng(mix_seed(seed, static_cast<std::uint64_t>(p)));
    frame.counts[p] =
        static_cast<double>(poisson_sample(rng, expected.counts[p]));
  });
  return frame;
}

CentroidEstimate estimate_centroid(const NoisySpectrum& frame) {
  const std::size_t n = frame.counts.size();
  const double total =
      par::indexed_sum(n, [&](std::size_t i) { return frame.counts[i]; });
  if (!(total > 0.0)) {
    throw NoSignalError("estimate_centroid: no counts recorded");
  }
  // Offsets from the frame's midpoint keep the mean cancellation-free.
  const double mid = 0.5 * (frame.pixel_centers.front() + frame.pixel_centers.back());
  const double mean_off = par::mirrored_sum(n, [&](std::size_t i) {
    return (frame.pixel_centers[i] - mid) * frame.counts[i];
  }) / total;
  const double var = par::indexed_sum(n, [&](std::size_t i) {
    const double d = (frame.pixel_centers[i] - mid) - mean_off;
    return d * d * frame.counts[i];
  }) / total;
  return CentroidEstimate{mid + mean_off, std::sqrt(var / total)};
}

}  // namespace wva
