#include "wva/spectral.hpp"

#include <cmath>
#include <numbers>
#include <utility>

#include "wva/errors.hpp"
#include "wva/parallel.hpp"

namespace wva {

double SpectralProfile::amplitude(double omega) const {
  const double x = (omega - omega0) / delta;
  return std::pow(std::numbers::pi * delta * delta, -0.25) * std::exp(-0.5 * x * x);
}

double SpectralProfile::density(double omega) const {
  const double x = (omega - omega0) / delta;
  return std::exp(-x * x) / (delta * std::sqrt(std::numbers::pi));
}

SpectralGrid::SpectralGrid(double center, std::vector<double> offsets,
                           std::vector<double> weights, double bin_width)
    : center_(center),
      offsets_(std::move(offsets)),
      weights_(std::move(weights)),
      bin_width_(bin_width) {
  if (offsets_.size() != weights_.size() || offsets_.empty()) {
    throw InvalidParameterError("SpectralGrid: offsets/weights size mismatch or empty");
  }
  for (std::size_t i = 1; i < offsets_.size(); ++i) {
    if (!(offsets_[i] > offsets_[i - 1])) {
      throw InvalidParameterError("SpectralGrid: frequencies must be strictly increasing");
    }
  }
  for (double w : weights_) {
    if (!(w >= 0.0)) throw InvalidParameterError("SpectralGrid: weights must be nonnegative");
  }
}

SpectralGrid SpectralGrid::from_samples(std::vector<double> omegas,
                                        std::vector<double> weights,
                                        double bin_width) {
  if (omegas.empty()) throw InvalidParameterError("SpectralGrid: empty sample set");
  const double center = 0.5 * (omegas.front() + omegas.back());
  std::vector<double> offsets(omegas.size());
  for (std::size_t i = 0; i < omegas.size(); ++i) offsets[i] = omegas[i] - center;
  return SpectralGrid(center, std::move(offsets), std::move(weights), bin_width);
}

std::vector<double> SpectralGrid::omegas() const {
  std::vector<double> out(offsets_.size());
  for (std::size_t i = 0; i < offsets_.size(); ++i) out[i] = center_ + offsets_[i];
  return out;
}

SpectralGrid SpectralGrid::with_weights(std::vector<double> weights) const {
  return SpectralGrid(center_, offsets_, std::move(weights), bin_width_);
}

SpectralProfile gaussian_profile(double omega0, double delta) {
  if (!(omega0 > 0.0) || !std::isfinite(omega0)) {
    throw InvalidParameterError("gaussian_profile: omega0 must be positive and finite");
  }
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw InvalidParameterError("gaussian_profile: delta must be positive and finite");
  }
  return SpectralProfile{omega0, delta};
}

SpectralProfile from_wavelength(double lambda0_m, double delta_lambda_m,
                                WidthConvention convention) {
  if (!(lambda0_m > 0.0) || !std::isfinite(lambda0_m)) {
    throw InvalidParameterError("from_wavelength: lambda0 must be positive and finite");
  }
  if (!(delta_lambda_m > 0.0) || !(delta_lambda_m < lambda0_m)) {
    throw InvalidParameterError(
        "from_wavelength: delta_lambda must satisfy 0 < delta_lambda < lambda0");
  }
  const double two_pi_c = 2.0 * std::numbers::pi * kSpeedOfLight;
  const double omega0 = two_pi_c / lambda0_m;
  double delta = two_pi_c * delta_lambda_m / (lambda0_m * lambda0_m);
  if (convention == WidthConvention::intensity_fwhm) {
    // |f|^2 has variance delta^2/2, hence FWHM = 2 sqrt(ln 2) delta.
    delta /= 2.0 * std::sqrt(std::numbers::ln2);
  }
  return gaussian_profile(omega0, delta);
}

SpectralGrid sample_grid(const SpectralProfile& profile, double span_sigmas,
                         std::size_t n_points) {
  if (!(span_sigmas >= 4.0)) {
    throw InvalidParameterError("sample_grid: span_sigmas must be >= 4");
  }
  if (n_points < (std::size_t{1} << 10)) {
    throw InvalidParameterError("sample_grid: n_points must be >= 1024");
  }
  // Keep the grid symmetric about omega0: if the requested span would cross
  // the positive-frequency floor, shrink both edges together.
  const double floor_omega = profile.delta * 1e-6;
  const double max_span = (profile.omega0 - floor_omega) / profile.delta;
  const double span = span_sigmas < max_span ? span_sigmas : max_span;
  if (!(span > 0.0)) {
    throw InvalidParameterError("sample_grid: profile too close to zero frequency");
  }

  const double half_width = span * profile.delta;
  const double h = 2.0 * half_width / static_cast<double>(n_points);
  std::vector<double> offsets(n_points);
  std::vector<double> weights(n_points);
  const double inv_norm = 1.0 / (profile.delta * std::sqrt(std::numbers::pi));
  const double half_n = 0.5 * static_cast<double>(n_points);
  par::for_each_index(n_points, [&](std::size_t i) {
    // Bin midpoints; (i + 0.5 - n/2) is exactly antisymmetric under
    // i -> n-1-i, so offsets come out exactly antisymmetric too.
    const double off = (static_cast<double>(i) + 0.5 - half_n) * h;
    offsets[i] = off;
    const double x = off / profile.delta;
    weights[i] = std::exp(-x * x) * inv_norm * h;
  });
  return SpectralGrid(profile.omega0, std::move(offsets), std::move(weights), h);
}

double grid_mean_offset(const SpectralGrid& grid) {
  const auto off = grid.offsets();
  const auto w = grid.weights();
  const double total = grid_total_weight(grid);
  if (!(total > 0.0)) {
    throw EmptySpectrumError("grid_mean_offset: total weight is zero");
  }
  const double first = par::mirrored_sum(
      grid.size(), [&](std::size_t i) { return off[i] * w[i]; });
  return first / total;
}

double grid_total_weight(const SpectralGrid& grid) {
  const auto w = grid.weights();
  return par::indexed_sum(grid.size(), [&](std::size_t i) { return w[i]; });
}

GridMoments grid_moments(const SpectralGrid& grid) {
  const double total = grid_total_weight(grid);
  if (!(total > 0.0)) {
    throw EmptySpectrumError("grid_moments: total weight is zero");
  }
  const double mean_off = grid_mean_offset(grid);
  const auto off = grid.offsets();
  const auto w = grid.weights();
  const double second = par::indexed_sum(grid.size(), [&](std::size_t i) {
    const double d = off[i] - mean_off;
    return d * d * w[i];
  });
  return GridMoments{grid.center() + mean_off, second / total};
}

TimeDomainProbe time_domain_dual(const SpectralProfile& profile) {
  return TimeDomainProbe{1.0 / profile.delta};
}

SpectralProfile spectral_dual(const TimeDomainProbe& probe, double omega0) {
  if (!(probe.sigma > 0.0)) {
    throw InvalidParameterError("spectral_dual: sigma must be positive");
  }
  return gaussian_profile(omega0, 1.0 / probe.sigma);
}

}  // namespace wva
