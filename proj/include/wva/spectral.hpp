#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace wva {

/// Exact SI value of the speed of light, m/s.
inline constexpr double kSpeedOfLight = 299792458.0;

/// Gaussian frequency-domain probe: amplitude
///   f(w) = (pi delta^2)^{-1/4} exp[-(w - omega0)^2 / (2 delta^2)],
/// so the intensity |f|^2 has mean omega0 and variance delta^2 / 2.
struct SpectralProfile {
  double omega0;  // center angular frequency, rad/s
  double delta;   // spectral spread, rad/s

  double amplitude(double omega) const;
  /// |f(omega)|^2, units s/rad.
  double density(double omega) const;
};

/// Time-domain dual of a SpectralProfile: g(t) = (pi sigma^2)^{-1/4}
/// exp(-t^2 / 2 sigma^2) with sigma = 1/delta.
struct TimeDomainProbe {
  double sigma;  // temporal spread, s
};

/// How a wavelength width maps onto the spectral spread delta.
enum class WidthConvention {
  /// Delta-lambda converts directly: delta = 2 pi c d_lambda / lambda0^2.
  amplitude_spread,
  /// Delta-lambda is the FWHM of the intensity spectrum |f|^2:
  /// delta = (2 pi c d_lambda / lambda0^2) / (2 sqrt(ln 2)).
  intensity_fwhm,
};

/// Uniformly spaced spectral samples with nonnegative weights
/// (density times bin measure). Offsets from the grid center are stored
/// exactly antisymmetric for symmetric grids, which lets downstream
/// moment sums cancel pair by pair instead of accumulating round-off.
class SpectralGrid {
 public:
  SpectralGrid(double center, std::vector<double> offsets,
               std::vector<double> weights, double bin_width);

  /// Build from absolute frequencies (generic path for hand-made grids).
  static SpectralGrid from_samples(std::vector<double> omegas,
                                   std::vector<double> weights,
                                   double bin_width);

  std::size_t size() const { return offsets_.size(); }
  double center() const { return center_; }
  double bin_width() const { return bin_width_; }
  std::span<const double> offsets() const { return offsets_; }
  std::span<const double> weights() const { return weights_; }

  double omega(std::size_t i) const { return center_ + offsets_[i]; }
  std::vector<double> omegas() const;

  /// Same geometry, new weights.
  SpectralGrid with_weights(std::vector<double> weights) const;

 private:
  double center_;
  std::vector<double> offsets_;
  std::vector<double> weights_;
  double bin_width_;
};

struct GridMoments {
  double mean;      // rad/s
  double variance;  // (rad/s)^2
};

SpectralProfile gaussian_profile(double omega0, double delta);

SpectralProfile from_wavelength(double lambda0_m, double delta_lambda_m,
                                WidthConvention convention);

/// Midpoint-rule grid over [omega0 - span*delta, omega0 + span*delta],
/// clipped symmetrically so the grid stays centered on omega0 when the
/// lower edge would cross the positive-frequency floor.
/// Weights are |f(w)|^2 * bin_width and sum to 1 up to truncation.
SpectralGrid sample_grid(const SpectralProfile& profile, double span_sigmas = 8.0,
                         std::size_t n_points = std::size_t{1} << 14);

/// Weighted mean frequency relative to the grid center (pair-cancelling
/// deterministic sum). Building block for centroid shifts.
double grid_mean_offset(const SpectralGrid& grid);

double grid_total_weight(const SpectralGrid& grid);

/// Weighted mean and variance. Throws EmptySpectrumError when all weights
/// vanish.
GridMoments grid_moments(const SpectralGrid& grid);

TimeDomainProbe time_domain_dual(const SpectralProfile& profile);

/// Inverse of time_domain_dual: delta = 1/sigma at the given center.
SpectralProfile spectral_dual(const TimeDomainProbe& probe, double omega0);

}  // namespace wva
