#include "wva/report.hpp"

#include <json.hpp>

#include "wva/sweep.hpp"

namespace wva {

namespace {

using Json = nlohmann::ordered_json;

Json config_echo(const RunConfig& config, const SpectralProfile& profile) {
  Json j;
  j["center_wavelength_nm"] = config.center_wavelength_nm;
  j["spectral_width_nm"] = config.spectral_width_nm;
  j["width_convention"] = config.width_convention == WidthConvention::amplitude_spread
                              ? "amplitude-spread"
                              : "intensity-fwhm";
  j["omega0_rads"] = profile.omega0;
  j["delta_rads"] = profile.delta;
  j["epsilon_rad"] = config.epsilon_rad;
  j["tau_s"] = config.tau_as * 1e-18;
  return j;
}

}  // namespace

std::string simulation_report_json(const RunConfig& config) {
  const SpectralProfile profile = config.profile();
  const CouplingParams params = config.params();
  const MeasurementResult result = evaluate_measurement(profile, params);
  const WorkingRange range =
      working_range(profile, params.epsilon_rad, config.envelope_threshold);

  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "simulation";
  j["parameters"] = config_echo(config, profile);
  j["probability"] = result.probability;
  j["centroid_rads"] = result.centroid;
  j["shift_rads"] = result.shift;
  j["weak_limit_probability"] = result.weak_limit_probability;
  j["weak_limit_shift_rads"] = result.weak_limit_shift;
  if (result.amplification_factor) {
    j["amplification_factor"] = *result.amplification_factor;
  } else {
    j["amplification_factor"] = nullptr;  // undefined at tau = 0
  }
  j["envelope"] = result.envelope;
  if (result.weak_limit_shift != 0.0) {
    j["shift_over_weak_limit"] = result.shift / result.weak_limit_shift;
  }
  j["probability_over_weak_limit"] = result.probability / result.weak_limit_probability;
  j["regime"] = {
      {"linear", in_linear_regime(profile, params)},
      {"label", in_linear_regime(profile, params) ? "weak" : "nonlinear"},
      {"envelope_threshold", config.envelope_threshold},
      {"envelope_above_threshold", result.envelope >= config.envelope_threshold},
      {"tau_max_weak_s", range.tau_max_weak_s},
      {"tau_max_linear_s", range.tau_max_linear_s},
  };
  return j.dump(2) + "\n";
}

std::string estimation_report_json(const RunConfig& config,
                                   const EstimationReport& report) {
  const SpectralProfile profile = config.profile();

  Json j;
  j["schema_version"] = kSchemaVersion;
  j["kind"] = "estimation";
  j["parameters"] = config_echo(config, profile);
  j["parameters"]["photon_budget"] = config.photon_budget;
  j["parameters"]["n_trials"] = report.n_trials;
  j["parameters"]["base_seed"] = config.seed;
  j["parameters"]["detector_pixels"] = config.detector_pixels;
  j["parameters"]["resolution_sigma_fraction"] = config.resolution_sigma_fraction;
  j["parameters"]["alignment_offset_fraction"] = config.alignment_offset_fraction;
  j["method"] = report.method;
  j["noise_mode"] = report.noise_mode;
  j["tau_true_s"] = report.tau_true;
  j["tau_hat_s"] = report.tau_hat;
  j["bias_s"] = report.bias;
  j["std_s"] = report.std_dev;
  j["centroid_hat_rads"] = report.centroid_hat;
  j["centroid_stderr_rads"] = report.centroid_stderr;
  j["n_failed"] = report.n_failed;
  j["trial_errors"] = report.trial_errors;
  return j.dump(2) + "\n";
}

}  // namespace wva
