#pragma once

#include <complex>

namespace wva {

using Complex = std::complex<double>;

/// Normalized two-component polarization state in the |H>, |V> basis.
struct JonesState {
  Complex h_amp;
  Complex v_amp;

  double norm_squared() const { return std::norm(h_amp) + std::norm(v_amp); }
};

/// Observable diagonal in the |H>, |V> basis. The polarization-contrast
/// observable used throughout is A|H> = +|H>, A|V> = -|V>.
struct Observable {
  double h_eigenvalue;
  double v_eigenvalue;
};

inline Observable hv_observable() { return Observable{+1.0, -1.0}; }

/// Weak value <post|A|pre>/<post|pre> together with the postselection
/// probability |<post|pre>|^2.
struct WeakValue {
  Complex value;
  double overlap_probability;
};

/// Normalize (h, v) to a unit-norm state. Throws InvalidStateError for the
/// zero vector.
JonesState make_state(Complex h_amp, Complex v_amp);

/// <bra|ket> with the usual conjugate-linear first slot.
Complex inner_product(const JonesState& bra, const JonesState& ket);

/// Preselection (|H> + i|V>)/sqrt(2).
JonesState bs_preselection();

/// Postselection state at angle epsilon (radians). Chosen so that against
/// bs_preselection() the weak value of hv_observable() is i*cot(epsilon)
/// and the postselection probability is sin^2(epsilon).
JonesState bs_postselection(double epsilon_rad);

/// Weak value of `obs` between pre- and post-selected states. Throws
/// OrthogonalPostselectionError when |<post|pre>| <= overlap_floor.
WeakValue weak_value(const JonesState& pre, const JonesState& post,
                     const Observable& obs, double overlap_floor = 1e-15);

}  // namespace wva
