#include "wva/jones.hpp"

#include <cmath>

#include "wva/errors.hpp"

namespace wva {

JonesState make_state(Complex h_amp, Complex v_amp) {
  const double n2 = std::norm(h_amp) + std::norm(v_amp);
  if (!(n2 > 0.0) || !std::isfinite(n2)) {
    throw InvalidStateError("make_state: amplitudes must have nonzero finite norm");
  }
  const double inv = 1.0 / std::sqrt(n2);
  return JonesState{h_amp * inv, v_amp * inv};
}

Complex inner_product(const JonesState& bra, const JonesState& ket) {
  return std::conj(bra.h_amp) * ket.h_amp + std::conj(bra.v_amp) * ket.v_amp;
}

JonesState bs_preselection() {
  const double s = 1.0 / std::sqrt(2.0);
  return JonesState{Complex(s, 0.0), Complex(0.0, s)};
}

JonesState bs_postselection(double epsilon_rad) {
  if (!std::isfinite(epsilon_rad)) {
    throw InvalidParameterError("bs_postselection: epsilon must be finite");
  }
  const double s = 1.0 / std::sqrt(2.0);
  const Complex i(0.0, 1.0);
  // (i e^{i eps}|H> + e^{-i eps}|V>)/sqrt(2): overlap with the preselection
  // is sin^2(eps) and the weak value of A = diag(+1,-1) is i cot(eps).
  return JonesState{i * std::exp(i * epsilon_rad) * s, std::exp(-i * epsilon_rad) * s};
}

WeakValue weak_value(const JonesState& pre, const JonesState& post,
                     const Observable& obs, double overlap_floor) {
  const Complex overlap = inner_product(post, pre);
  const double overlap_probability = std::norm(overlap);
  if (std::abs(overlap) <= overlap_floor) {
    throw OrthogonalPostselectionError(
        "weak_value: pre/post states are (near-)orthogonal", overlap_probability);
  }
  const Complex numerator = std::conj(post.h_amp) * obs.h_eigenvalue * pre.h_amp +
                            std::conj(post.v_amp) * obs.v_eigenvalue * pre.v_amp;
  return WeakValue{numerator / overlap, overlap_probability};
}

}  // namespace wva
