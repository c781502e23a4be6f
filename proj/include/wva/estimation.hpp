#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wva/amplification.hpp"
#include "wva/detector.hpp"
#include "wva/spectral.hpp"

namespace wva {

enum class InversionMethod { weak_limit, exact_invert };

/// How the simulated measurement is read out.
///   poisson         - full pipeline with Poisson photon counting
///   expected_counts - pixelated detector, counts replaced by their means
///   ideal           - noise-free limit: exact spectrum centroid (plus the
///                     alignment offset), no pixelation
enum class NoiseMode { poisson, expected_counts, ideal };

struct InversionOptions {
  double epsilon_floor = 1e-6;
  /// Upper end of the search bracket; 0 selects the default
  /// (100x the linear-response bound eps / (10 omega0)).
  double tau_bracket_s = 0.0;
  /// Explicit brackets are rejected as ambiguous when the shift is not
  /// monotone across them; the default bracket is trimmed to the monotone
  /// branch through tau = 0 instead.
  bool bracket_is_explicit = false;
  int max_iterations = 200;
};

/// Recover tau from a measured centroid shift.
/// weak_limit:   tau = shift * tan(eps) / delta^2.
/// exact_invert: bisection on the closed-form shift over the monotone
///               branch; OutOfRangeShiftError when the shift exceeds the
///               branch maximum, AmbiguousBracketError when an explicit
///               bracket spans a turning point.
double invert_shift(double delta_omega_hat, const SpectralProfile& profile,
                    double epsilon_rad, InversionMethod method,
                    const InversionOptions& options = {});

struct StudyConfig {
  std::size_t n_trials = 100;
  std::uint64_t base_seed = 1;
  InversionMethod method = InversionMethod::exact_invert;
  NoiseMode noise = NoiseMode::poisson;
  double grid_span = 8.0;
  std::size_t grid_points = std::size_t{1} << 14;
  InversionOptions inversion = {};
};

struct EstimationReport {
  double tau_hat = 0.0;          // mean recovered delay, s
  double tau_true = 0.0;         // s
  std::string method;            // "weak-limit" | "exact-invert"
  std::string noise_mode;        // "poisson" | "expected-counts" | "ideal"
  double centroid_hat = 0.0;     // mean measured centroid, rad/s
  double centroid_stderr = 0.0;  // mean per-trial standard error, rad/s
  std::size_t n_trials = 0;
  std::size_t n_failed = 0;
  double bias = 0.0;             // mean(tau_hat) - tau_true, s
  double std_dev = 0.0;          // sample std of tau_hat, s
  std::vector<std::string> trial_errors;  // unique error names observed
};

const char* to_string(InversionMethod method);
const char* to_string(NoiseMode mode);

/// Run detect -> estimate_centroid -> invert_shift over n_trials frames
/// with per-trial seeds base_seed + i. Trials are independent and may run
/// concurrently; aggregation is by trial index, so the report is bitwise
/// reproducible for a fixed base_seed regardless of thread count.
/// Throws StudyDegenerateError when more than 10% of trials fail.
EstimationReport monte_carlo_study(const SpectralProfile& profile,
                                   const CouplingParams& params,
                                   const DetectorModel& model,
                                   const StudyConfig& config);

}  // namespace wva
