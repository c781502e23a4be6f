#include "wva/estimation.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "wva/errors.hpp"
#include "wva/parallel.hpp"

namespace wva {

const char* to_string(InversionMethod method) {
  return method == InversionMethod::weak_limit ? "weak-limit" : "exact-invert";
}

const char* to_string(NoiseMode mode) {
  switch (mode) {
    case NoiseMode::poisson: return "poisson";
    case NoiseMode::expected_counts: return "expected-counts";
    default: return "ideal";
  }
}

namespace {

void check_epsilon(double epsilon_rad, const InversionOptions& options) {
  constexpr double half_pi = 1.5707963267948966;
  if (!(epsilon_rad > options.epsilon_floor) || !(epsilon_rad <= half_pi)) {
    throw InvalidParameterError(
        "invert_shift: epsilon must lie in (epsilon_floor, pi/2]");
  }
}

}  // namespace

double invert_shift(double delta_omega_hat, const SpectralProfile& profile,
                    double epsilon_rad, InversionMethod method,
                    const InversionOptions& options) {
  check_epsilon(epsilon_rad, options);
  if (!std::isfinite(delta_omega_hat)) {
    throw InvalidParameterError("invert_shift: shift must be finite");
  }

  if (method == InversionMethod::weak_limit) {
    return delta_omega_hat * std::tan(epsilon_rad) / (profile.delta * profile.delta);
  }

  if (delta_omega_hat == 0.0) return 0.0;

  // Mirror negative shifts onto the positive-tau branch: the magnitude is
  // inverted on |shift|(-tau), which increases from zero like the positive
  // branch does.
  const double sign = delta_omega_hat < 0.0 ? -1.0 : 1.0;
  const double target = std::fabs(delta_omega_hat);
  auto branch_shift = [&](double tau) {
    return sign * closed_form_shift(profile, CouplingParams{sign * tau, epsilon_rad});
  };

  double bracket = options.tau_bracket_s;
  if (!(bracket > 0.0)) {
    bracket = 100.0 * epsilon_rad / (10.0 * profile.omega0);
  }

  // Trim the bracket to the monotone branch through tau = 0 (default), or
  // reject an explicit bracket that spans a turning point.
  constexpr int kScanPoints = 256;
  double tau_hi = bracket;
  double value_hi = 0.0;
  for (int k = 1; k <= kScanPoints; ++k) {
    const double tau = bracket * static_cast<double>(k) / kScanPoints;
    const double value = branch_shift(tau);
    if (value <= value_hi) {
      if (options.bracket_is_explicit) {
        throw AmbiguousBracketError(
            "invert_shift: shift is not monotone across the bracket; "
            "retry with a tighter tau bracket");
      }
      tau_hi = bracket * static_cast<double>(k - 1) / kScanPoints;
      break;
    }
    tau_hi = tau;
    value_hi = value;
  }
  if (!(target <= value_hi)) {
    throw OutOfRangeShiftError(
        "invert_shift: measured shift exceeds the maximum reachable on the "
        "monotone branch");
  }

  // Bisection on the monotone branch; the bracket collapses to machine
  // resolution well inside the iteration cap.
  double lo = 0.0, hi = tau_hi;
  for (int it = 0; it < options.max_iterations; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    if (branch_shift(mid) < target) {
      lo = mid;
    } else {
      hi = mid;
    }
    if (hi - lo <= 1e-15 * hi) break;
  }
  return sign * 0.5 * (lo + hi);
}

EstimationReport monte_carlo_study(const SpectralProfile& profile,
                                   const CouplingParams& params,
                                   const DetectorModel& model,
                                   const StudyConfig& config) {
  if (config.n_trials < 2) {
    throw InvalidParameterError("monte_carlo_study: need at least 2 trials");
  }
  check_epsilon(params.epsilon_rad, config.inversion);

  const SpectralGrid grid = sample_grid(profile, config.grid_span, config.grid_points);
  const SpectralGrid spectrum = postselected_spectrum(profile, params, grid);
  const double probability = numeric_probability(profile, params, grid);

  struct Trial {
    double tau_hat = 0.0;
    double centroid = 0.0;
    double stderr_value = 0.0;
    bool ok = false;
    std::string error;
  };
  std::vector<Trial> trials(config.n_trials);

  if (config.noise == NoiseMode::ideal) {
    const double centroid = grid_moments(spectrum).mean + model.alignment_offset;
    const double tau_hat = invert_shift(centroid - profile.omega0, profile,
                                        params.epsilon_rad, config.method,
                                        config.inversion);
    for (auto& t : trials) {
      t = Trial{tau_hat, centroid, 0.0, true, {}};
    }
  } else {
    const NoisySpectrum expected = detect(spectrum, probability, model,
                                          config.base_seed, /*sample_counts=*/false);
    par::for_each_index(config.n_trials, [&](std::size_t i) {
      Trial& t = trials[i];
      try {
        NoisySpectrum frame =
            config.noise == NoiseMode::poisson
                ? sample_poisson(expected, config.base_seed + i)
                : expected;
        const CentroidEstimate est = estimate_centroid(frame);
        t.centroid = est.centroid;
        t.stderr_value = est.standard_error;
        t.tau_hat = invert_shift(est.centroid - profile.omega0, profile,
                                 params.epsilon_rad, config.method, config.inversion);
        t.ok = true;
      } catch (const Error& e) {
        t.error = e.name();
      }
    });
  }

  std::size_t n_ok = 0;
  double sum_centroid = 0.0, sum_stderr = 0.0;
  double pivot = 0.0;  // first successful tau_hat; keeps the variance exact
  double sum_dev = 0.0;
  std::set<std::string> error_names;
  for (const Trial& t : trials) {
    if (t.ok) {
      if (n_ok == 0) pivot = t.tau_hat;
      ++n_ok;
      sum_dev += t.tau_hat - pivot;
      sum_centroid += t.centroid;
      sum_stderr += t.stderr_value;
    } else {
      error_names.insert(t.error);
    }
  }
  const std::size_t n_failed = config.n_trials - n_ok;
  if (static_cast<double>(n_failed) > 0.10 * static_cast<double>(config.n_trials)) {
    throw StudyDegenerateError("monte_carlo_study: more than 10% of trials failed");
  }

  EstimationReport report;
  report.tau_true = params.tau_s;
  report.method = to_string(config.method);
  report.noise_mode = to_string(config.noise);
  report.n_trials = config.n_trials;
  report.n_failed = n_failed;
  report.trial_errors.assign(error_names.begin(), error_names.end());
  const double mean_dev = sum_dev / static_cast<double>(n_ok);
  report.tau_hat = pivot + mean_dev;
  report.centroid_hat = sum_centroid / static_cast<double>(n_ok);
  report.centroid_stderr = sum_stderr / static_cast<double>(n_ok);
  report.bias = report.tau_hat - params.tau_s;
  double ss = 0.0;
  for (const Trial& t : trials) {
    if (!t.ok) continue;
    const double d = (t.tau_hat - pivot) - mean_dev;
    ss += d * d;
  }
  report.std_dev = n_ok > 1 ? std::sqrt(ss / static_cast<double>(n_ok - 1)) : 0.0;
  return report;
}

}  // namespace wva
