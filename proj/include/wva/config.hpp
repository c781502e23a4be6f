#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "wva/amplification.hpp"
#include "wva/detector.hpp"
#include "wva/estimation.hpp"
#include "wva/spectral.hpp"
#include "wva/sweep.hpp"

namespace wva {

/// Run configuration assembled from a key-value config file plus
/// command-line overrides (overrides win). Boundary units are human units
/// (nm, attoseconds, radians); everything downstream is strict SI.
struct RunConfig {
  double center_wavelength_nm = 600.0;
  double spectral_width_nm = 100.0;
  WidthConvention width_convention = WidthConvention::amplitude_spread;
  SpectrumVariant spectrum_variant = SpectrumVariant::sine_sum;
  double epsilon_rad = 0.01;
  double tau_as = 10.0;
  double grid_span = 8.0;
  std::size_t grid_points = std::size_t{1} << 14;
  double envelope_threshold = 0.99;

  std::size_t detector_pixels = 2048;
  double detector_span_sigmas = 4.0;
  double resolution_sigma_fraction = 0.02;  // of delta
  double alignment_offset_fraction = 0.0;   // of delta
  double photon_budget = 1e6;
  std::size_t n_trials = 100;
  InversionMethod method = InversionMethod::exact_invert;
  NoiseMode noise_mode = NoiseMode::poisson;
  std::uint64_t seed = 12345;

  std::size_t fig2_points = 1600;
  std::size_t fig2_inset_points = 256;
  double fig3_tau_min_as = 1e-3;
  double fig3_tau_max_as = 100.0;
  std::size_t fig3_tau_points = 121;
  std::size_t fig3_width_points = 46;
  std::size_t fig3_epsilon_points = 100;

  SpectralProfile profile() const;
  CouplingParams params() const;
  DetectorModel detector(const SpectralProfile& profile) const;
  StudyConfig study() const;
  Figure2Options figure2_options() const;
  Figure3Options figure3_options() const;

  /// Check every physical field against the preconditions of the modules
  /// that will consume it. Throws ConfigError naming the offending field.
  void validate() const;
};

/// Apply `key = value` to the config. Throws ConfigError naming the key for
/// unknown keys or unparsable values.
void apply_config_entry(RunConfig& config, const std::string& key,
                        const std::string& value);

/// Parse a plain key-value file ('#' comments, blank lines allowed).
RunConfig load_config_file(const std::string& path);

WidthConvention parse_width_convention(const std::string& text);
InversionMethod parse_method(const std::string& text);
NoiseMode parse_noise_mode(const std::string& text);
SpectrumVariant parse_spectrum_variant(const std::string& text);

}  // namespace wva
