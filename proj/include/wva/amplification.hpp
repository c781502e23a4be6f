#pragma once

#include <optional>
#include <string>

#include "wva/spectral.hpp"

namespace wva {

/// Coupling between polarization and the spectral probe: a birefringent
/// delay tau (2*tau between |H> and |V>) followed by postselection at
/// angle epsilon.
struct CouplingParams {
  double tau_s;        // time delay, s; any finite real
  double epsilon_rad;  // postselection angle, radians
};

/// Which postselected-spectrum filter to apply. `sine_sum` is the
/// self-consistent form F(w) ~ |f(w)|^2 sin^2(w tau + eps) that matches the
/// closed-form probability and centroid shift below. `cosine_difference`
/// (the filter cos^2(w tau - eps)) is kept selectable so the mismatch
/// between the two conventions is itself testable.
enum class SpectrumVariant { sine_sum, cosine_difference };

/// Everything the scheme predicts for one (profile, tau, epsilon) point.
struct MeasurementResult {
  double probability;             // postselection probability T
  double centroid;                // post-selected spectral mean, rad/s
  double shift;                   // centroid - omega0, rad/s
  double weak_limit_probability;  // sin^2(eps)
  double weak_limit_shift;        // tau delta^2 cot(eps), rad/s
  std::optional<double> amplification_factor;  // shift/(tau delta^2); empty at tau=0
  double envelope;                // exp(-delta^2 tau^2)
};

/// Floor below which the postselection probability is treated as zero.
inline constexpr double kProbabilityFloor = 1e-300;

/// T = 0.5 {1 - exp(-delta^2 tau^2) cos[2(omega0 tau + eps)]},
/// evaluated cancellation-free as
/// -expm1(-d^2 t^2)/2 + exp(-d^2 t^2) sin^2(omega0 t + eps).
double closed_form_probability(const SpectralProfile& profile,
                               const CouplingParams& params);

/// Independent quadrature route for the probability: the grid-weighted sum
/// of the postselection filter. `grid` must be sampled from `profile`.
double numeric_probability(const SpectralProfile& profile, const CouplingParams& params,
                           const SpectralGrid& grid,
                           SpectrumVariant variant = SpectrumVariant::sine_sum);

/// Post-selected, renormalized spectrum on the same grid geometry.
/// Throws ZeroPostselectionError when the filtered mass underflows
/// (e.g. tau = 0 and eps = 0).
SpectralGrid postselected_spectrum(const SpectralProfile& profile,
                                   const CouplingParams& params, const SpectralGrid& grid,
                                   SpectrumVariant variant = SpectrumVariant::sine_sum);

/// Centroid shift
/// dw = tau delta^2 / (2T) * exp(-delta^2 tau^2) * sin[2(omega0 tau + eps)].
double closed_form_shift(const SpectralProfile& profile, const CouplingParams& params);

struct WeakLimit {
  double probability;  // sin^2(eps)
  double shift;        // tau delta^2 cot(eps)
};

/// First-order (tau -> 0) limits. Requires eps > 0.
WeakLimit weak_limit(const SpectralProfile& profile, const CouplingParams& params);

/// Gain G = shift / (tau delta^2); tends to cot(eps) in the weak limit.
/// Throws UndefinedGainError at tau = 0.
double amplification_factor(const SpectralProfile& profile, const CouplingParams& params);

/// Interference-contrast envelope exp(-delta^2 tau^2).
double decoherence_envelope(const SpectralProfile& profile, double tau_s);

struct WorkingRange {
  double tau_max_weak_s;    // envelope stays above the threshold up to here
  double tau_max_linear_s;  // |omega0 tau| <= eps/10 up to here
  std::string description;
};

/// Largest |tau| with exp(-delta^2 tau^2) >= envelope_threshold, plus the
/// linear-response bound |omega0 tau| <= eps/10.
WorkingRange working_range(const SpectralProfile& profile, double epsilon_rad,
                           double envelope_threshold = 0.99);

/// True when |omega0 tau| <= eps/10 (first-order response regime).
bool in_linear_regime(const SpectralProfile& profile, const CouplingParams& params);

/// Weak-limit shift of this scheme over the pulsed-scheme value
/// 2 tau / (sigma^2 eps) at sigma = 1/delta: (eps cot eps)/2 -> 1/2.
double bs_convention_ratio(double epsilon_rad);

/// Closed-form bundle for one parameter point.
MeasurementResult evaluate_measurement(const SpectralProfile& profile,
                                       const CouplingParams& params);

}  // namespace wva
