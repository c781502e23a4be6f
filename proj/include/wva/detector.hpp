#pragma once

#include <cstdint>
#include <vector>

#include "wva/spectral.hpp"

namespace wva {

/// Simulated grating spectrometer: Gaussian instrument response, pixel
/// rebinning, a constant frequency calibration offset, and Poisson photon
/// counting. The photon budget is the expected number of source photons
/// BEFORE postselection; the detector sees N*T of them on average.
struct DetectorModel {
  std::size_t n_pixels = 2048;
  double range_low = 0.0;          // rad/s
  double range_high = 0.0;         // rad/s
  double resolution_sigma = 0.0;   // Gaussian response width, rad/s
  double alignment_offset = 0.0;   // systematic centroid bias, rad/s
  double photon_budget = 1e6;      // expected source photons N
};

/// Detector covering omega0 +/- 4 delta with the default pixel count and a
/// resolution of delta/50.
DetectorModel default_detector(const SpectralProfile& profile, double photon_budget);

/// One recorded frame. In sampled mode `counts` holds integer-valued
/// photon counts; in expected-counts mode it holds the Poisson means.
struct NoisySpectrum {
  std::vector<double> pixel_centers;  // rad/s
  std::vector<double> counts;
  std::uint64_t seed = 0;
  bool sampled = true;
  double clipped_fraction = 0.0;  // spectrum mass outside the detector range
  bool range_warning = false;     // clipped_fraction > 1%
};

/// Transport a normalized post-selected spectrum through the detector:
/// convolve with the instrument response, apply the alignment offset,
/// rebin to pixels, then draw Poisson counts with mean N*T*p_pixel
/// (deterministic in `seed`). With sample_counts = false the expected
/// counts are returned instead (the N -> infinity limit).
/// Throws DetectorMisconfiguredError when more than half the spectrum mass
/// falls outside the detector range.
NoisySpectrum detect(const SpectralGrid& spectrum, double postselection_probability,
                     const DetectorModel& model, std::uint64_t seed,
                     bool sample_counts = true);

/// Replace expected counts by Poisson draws (deterministic in `seed`,
/// independent per pixel). detect(..., true) is exactly this applied to
/// detect(..., false).
NoisySpectrum sample_poisson(const NoisySpectrum& expected, std::uint64_t seed);

struct CentroidEstimate {
  double centroid;       // rad/s
  double standard_error; // rad/s
};

/// Count-weighted mean of the pixel centers with its standard error
/// (weighted std / sqrt(total counts)). Throws NoSignalError when the
/// frame holds no counts.
CentroidEstimate estimate_centroid(const NoisySpectrum& frame);

}  // namespace wva
