#include "wva/amplification.hpp"

#include <cmath>
#include <sstream>

#include "wva/errors.hpp"
#include "wva/parallel.hpp"

namespace wva {

namespace {

void require_finite(const CouplingParams& params) {
  if (!std::isfinite(params.tau_s) || !std::isfinite(params.epsilon_rad)) {
    throw InvalidParameterError("coupling parameters must be finite");
  }
}

double filter_value(double phase, SpectrumVariant variant) {
  const double s = variant == SpectrumVariant::sine_sum ? std::sin(phase) : std::cos(phase);
  return s * s;
}

// Phase at grid offset `off`: w*tau + eps = (omega0 tau + eps) + off*tau for
// the sine_sum variant, w*tau - eps for cosine_difference.
double phase_base(const SpectralProfile& profile, const CouplingParams& params,
                  SpectrumVariant variant) {
  const double sign = variant == SpectrumVariant::sine_sum ? 1.0 : -1.0;
  return profile.omega0 * params.tau_s + sign * params.epsilon_rad;
}

}  // namespace

double closed_form_probability(const SpectralProfile& profile,
                               const CouplingParams& params) {
  require_finite(params);
  const double dt = profile.delta * params.tau_s;
  const double phase = profile.omega0 * params.tau_s + params.epsilon_rad;
  const double envelope = std::exp(-dt * dt);
  const double s = std::sin(phase);
  // 0.5 [1 - E cos(2 phase)] = (1 - E)/2 + E sin^2(phase), with (1 - E)
  // computed as -expm1 to survive dt -> 0.
  return 0.5 * (-std::expm1(-dt * dt)) + envelope * s * s;
}

double numeric_probability(const SpectralProfile& profile, const CouplingParams& params,
                           const SpectralGrid& grid, SpectrumVariant variant) {
  require_finite(params);
  const double base = phase_base(profile, params, variant);
  const auto off = grid.offsets();
  const auto w = grid.weights();
  return par::indexed_sum(grid.size(), [&](std::size_t i) {
    return w[i] * filter_value(base + off[i] * params.tau_s, variant);
  });
}

SpectralGrid postselected_spectrum(const SpectralProfile& profile,
                                   const CouplingParams& params, const SpectralGrid& grid,
                                   SpectrumVariant variant) {
  const double total = numeric_probability(profile, params, grid, variant);
  if (!(total > kProbabilityFloor)) {
    throw ZeroPostselectionError(
        "postselected_spectrum: postselection filter annihilates the spectrum");
  }
  const double base = phase_base(profile, params, variant);
  const auto off = grid.offsets();
  const auto w = grid.weights();
  std::vector<double> out(grid.size());
  par::for_each_index(grid.size(), [&](std::size_t i) {
    out[i] = w[i] * filter_value(base + off[i] * params.tau_s, variant) / total;
  });
  return grid.with_weights(std::move(out));
}

double closed_form_shift(const SpectralProfile& profile, const CouplingParams& params) {
  const double probability = closed_form_probability(profile, params);
  if (!(probability > kProbabilityFloor)) {
    throw ZeroPostselectionError("closed_form_shift: postselection probability underflows");
  }
  const double dt = profile.delta * params.tau_s;
  const double phase = profile.omega0 * params.tau_s + params.epsilon_rad;
  return params.tau_s * profile.delta * profile.delta / (2.0 * probability) *
         std::exp(-dt * dt) * std::sin(2.0 * phase);
}

WeakLimit weak_limit(const SpectralProfile& profile, const CouplingParams& params) {
  require_finite(params);
  if (!(params.epsilon_rad > 0.0)) {
    throw InvalidParameterError("weak_limit: epsilon must be positive");
  }
  const double s = std::sin(params.epsilon_rad);
  const double cot = std::cos(params.epsilon_rad) / s;
  return WeakLimit{s * s, params.tau_s * profile.delta * profile.delta * cot};
}

double amplification_factor(const SpectralProfile& profile, const CouplingParams& params) {
  require_finite(params);
  if (params.tau_s == 0.0) {
    throw UndefinedGainError("amplification_factor: undefined at tau = 0");
  }
  return closed_form_shift(profile, params) /
         (params.tau_s * profile.delta * profile.delta);
}

double decoherence_envelope(const SpectralProfile& profile, double tau_s) {
  const double dt = profile.delta * tau_s;
  return std::exp(-dt * dt);
}

WorkingRange working_range(const SpectralProfile& profile, double epsilon_rad,
                           double envelope_threshold) {
  if (!(envelope_threshold > 0.0) || !(envelope_threshold < 1.0)) {
    throw InvalidParameterError("working_range: threshold must lie in (0, 1)");
  }
  const double tau_max_weak = std::sqrt(-std::log(envelope_threshold)) / profile.delta;
  const double tau_max_linear = epsilon_rad / (10.0 * profile.omega0);
  std::ostringstream desc;
  desc << "envelope >= " << envelope_threshold << " for |tau| <= " << tau_max_weak
       << " s; linear response (|omega0 tau| <= eps/10) for |tau| <= "
       << tau_max_linear << " s";
  return WorkingRange{tau_max_weak, tau_max_linear, desc.str()};
}

bool in_linear_regime(const SpectralProfile& profile, const CouplingParams& params) {
  return std::fabs(profile.omega0 * params.tau_s) <= params.epsilon_rad / 10.0;
}

double bs_convention_ratio(double epsilon_rad) {
  if (!(epsilon_rad > 0.0)) {
    throw InvalidParameterError("bs_convention_ratio: epsilon must be positive");
  }
  return 0.5 * epsilon_rad * std::cos(epsilon_rad) / std::sin(epsilon_rad);
}

MeasurementResult evaluate_measurement(const SpectralProfile& profile,
                                       const CouplingParams& params) {
  MeasurementResult r{};
  r.probability = closed_form_probability(profile, params);
  r.shift = closed_form_shift(profile, params);
  r.centroid = profile.omega0 + r.shift;
  const WeakLimit wl = weak_limit(profile, params);
  r.weak_limit_probability = wl.probability;
  r.weak_limit_shift = wl.shift;
  r.envelope = decoherence_envelope(profile, params.tau_s);
  if (params.tau_s != 0.0) {
    r.amplification_factor = amplification_factor(profile, params);
  }
  return r;
}

}  // namespace wva
