#pragma once

#include <array>

#include "wva/amplification.hpp"
#include "wva/io.hpp"
#include "wva/spectral.hpp"

namespace wva {

inline constexpr const char* kSchemaVersion = "wva-1";

struct Figure2Options {
  double tau_max_s = 0.0;  // 0 selects 8/delta (full decoherence)
  std::size_t main_points = 1600;
  std::size_t inset_points = 256;
  double envelope_threshold = 0.99;
  double grid_span = 8.0;
  std::size_t grid_points = std::size_t{1} << 14;
};

/// Postselection probability against delay: columns
/// (tau_s, T_closed, T_numeric, envelope). The row set is a linear sweep to
/// tau_max merged with a dense sweep of the weak-measurement inset
/// [0, working_range(threshold)].
SweepTable figure2_table(const SpectralProfile& profile, double epsilon_rad,
                         const Figure2Options& options = {});

struct Figure3Options {
  double tau_fixed_s = 1e-17;  // 10 as
  double tau_min_s = 1e-21;
  double tau_max_s = 1e-16;
  std::size_t tau_points = 121;       // log-spaced, plus a tau = 0 row
  std::size_t width_points = 46;      // panel (c): 10 -> 100 nm
  std::size_t epsilon_points = 100;   // panel (d): log 1e-3 -> pi/4
  double center_wavelength_m = 600e-9;
  WidthConvention convention = WidthConvention::amplitude_spread;
  std::array<double, 3> epsilons{0.01, 0.05, 0.10};
  std::array<double, 3> widths_nm{10.0, 50.0, 100.0};
};

/// The four amplification panels:
/// [0] shift vs tau for three epsilons at 100 nm
/// [1] shift vs tau for three widths at eps = 0.01
/// [2] gain vs width for three epsilons at fixed tau
/// [3] gain vs epsilon for three widths at fixed tau
std::array<SweepTable, 4> figure3_tables(const Figure3Options& options = {});

}  // namespace wva
