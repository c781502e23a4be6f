#include "wva/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "wva/parallel.hpp"

namespace wva {

namespace {

std::vector<double> linear_sweep(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  }
  return out;
}

std::vector<double> log_sweep(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  const double llo = std::log(lo), lhi = std::log(hi);
  for (std::size_t i = 0; i < n; ++i) {
    out[i] = std::exp(llo + (lhi - llo) * static_cast<double>(i) /
                                static_cast<double>(n - 1));
  }
  return out;
}

std::string describe(const SpectralProfile& profile) {
  std::ostringstream s;
  s << "omega0 = " << format_label(profile.omega0)
    << " rad/s, delta = " << format_label(profile.delta) << " rad/s";
  return s.str();
}

}  // namespace

SweepTable figure2_table(const SpectralProfile& profile, double epsilon_rad,
                         const Figure2Options& options) {
  const double tau_max =
      options.tau_max_s > 0.0 ? options.tau_max_s : 8.0 / profile.delta;
  const WorkingRange range = working_range(profile, epsilon_rad,
                                           options.envelope_threshold);

  std::vector<double> taus = linear_sweep(0.0, tau_max, options.main_points);
  const std::vector<double> inset =
      linear_sweep(0.0, range.tau_max_weak_s, options.inset_points);
  taus.insert(taus.end(), inset.begin(), inset.end());
  std::sort(taus.begin(), taus.end());
  taus.erase(std::unique(taus.begin(), taus.end()), taus.end());

  const SpectralGrid grid = sample_grid(profile, options.grid_span, options.grid_points);

  SweepTable table;
  table.comments = {
      std::string("schema ") + kSchemaVersion,
      "postselection probability vs time delay",
      describe(profile),
      "epsilon_rad = " + format_label(epsilon_rad),
      "inset range: tau in [0, " + format_label(range.tau_max_weak_s) +
          "] s (envelope threshold " + format_label(options.envelope_threshold) + ")",
      "units: tau_s [s]; T_closed, T_numeric, envelope [dimensionless]",
  };
  table.columns = {"tau_s", "T_closed", "T_numeric", "envelope"};
  table.rows.resize(taus.size());
  par::for_each_index(taus.size(), [&](std::size_t i) {
    const CouplingParams params{taus[i], epsilon_rad};
    table.rows[i] = {taus[i], closed_form_probability(profile, params),
                     numeric_probability(profile, params, grid),
                     decoherence_envelope(profile, taus[i])};
  });
  return table;
}

std::array<SweepTable, 4> figure3_tables(const Figure3Options& options) {
  const double lambda0 = options.center_wavelength_m;
  const auto profile_for = [&](double width_nm) {
    return from_wavelength(lambda0, width_nm * 1e-9, options.convention);
  };

  std::vector<double> taus = log_sweep(options.tau_min_s, options.tau_max_s,
                                       options.tau_points);
  taus.insert(taus.begin(), 0.0);

  const std::string convention_line =
      options.convention == WidthConvention::amplitude_spread
          ? "width convention: amplitude-spread"
          : "width convention: intensity-fwhm";
  const std::string lambda_line =
      "center wavelength = " + format_label(lambda0 * 1e9) + " nm";
  const std::string gain_line =
      "gain G = shift/(tau delta^2); G -> cot(epsilon) as tau -> 0";

  std::array<SweepTable, 4> tables;

  // (a) shift vs tau, three epsilons, width fixed at the largest entry.
  {
    const SpectralProfile profile = profile_for(options.widths_nm.back());
    SweepTable& t = tables[0];
    t.comments = {std::string("schema ") + kSchemaVersion,
                  "spectral centroid shift vs time delay for three postselection angles",
                  lambda_line, convention_line,
                  "spectral width = " + format_label(options.widths_nm.back()) + " nm (" +
                      describe(profile) + ")",
                  "units: tau_s [s]; shift columns [rad/s]"};
    t.columns = {"tau_s"};
    for (double eps : options.epsilons) {
      t.columns.push_back("shift_rads_eps" + format_label(eps));
    }
    t.rows.resize(taus.size());
    par::for_each_index(taus.size(), [&](std::size_t i) {
      std::vector<double> row{taus[i]};
      for (double eps : options.epsilons) {
        row.push_back(closed_form_shift(profile, CouplingParams{taus[i], eps}));
      }
      t.rows[i] = std::move(row);
    });
  }

  // (b) shift vs tau, three widths, epsilon fixed at the smallest entry.
  {
    const double eps = options.epsilons.front();
    SweepTable& t = tables[1];
    t.comments = {std::string("schema ") + kSchemaVersion,
                  "spectral centroid shift vs time delay for three spectral widths",
                  lambda_line, convention_line,
                  "epsilon_rad = " + format_label(eps),
                  "units: tau_s [s]; shift columns [rad/s]"};
    t.columns = {"tau_s"};
    for (double w : options.widths_nm) {
      t.columns.push_back("shift_rads_w" + format_label(w) + "nm");
    }
    t.rows.resize(taus.size());
    par::for_each_index(taus.size(), [&](std::size_t i) {
      std::vector<double> row{taus[i]};
      for (double w : options.widths_nm) {
        row.push_back(closed_form_shift(profile_for(w), CouplingParams{taus[i], eps}));
      }
      t.rows[i] = std::move(row);
    });
  }

  // (c) gain vs width, three epsilons, fixed tau.
  {
    const std::vector<double> widths =
        linear_sweep(options.widths_nm.front(), options.widths_nm.back(),
                     options.width_points);
    SweepTable& t = tables[2];
    t.comments = {std::string("schema ") + kSchemaVersion,
                  "amplification factor vs spectral width for three postselection angles",
                  lambda_line, convention_line,
                  "tau = " + format_label(options.tau_fixed_s) + " s",
                  gain_line,
                  "units: width_nm [nm]; gain columns [dimensionless]"};
    t.columns = {"width_nm"};
    for (double eps : options.epsilons) {
      t.columns.push_back("gain_eps" + format_label(eps));
    }
    t.rows.resize(widths.size());
    par::for_each_index(widths.size(), [&](std::size_t i) {
      std::vector<double> row{widths[i]};
      const SpectralProfile profile = profile_for(widths[i]);
      for (double eps : options.epsilons) {
        row.push_back(
            amplification_factor(profile, CouplingParams{options.tau_fixed_s, eps}));
      }
      t.rows[i] = std::move(row);
    });
  }

  // (d) gain vs epsilon, three widths, fixed tau.
  {
    const std::vector<double> epsilons =
        log_sweep(1e-3, 0.25 * std::numbers::pi, options.epsilon_points);
    SweepTable& t = tables[3];
    t.comments = {std::string("schema ") + kSchemaVersion,
                  "amplification factor vs postselection angle for three spectral widths",
                  lambda_line, convention_line,
                  "tau = " + format_label(options.tau_fixed_s) + " s",
                  gain_line,
                  "units: epsilon_rad [rad]; gain columns [dimensionless]"};
    t.columns = {"epsilon_rad"};
    for (double w : options.widths_nm) {
      t.columns.push_back("gain_w" + format_label(w) + "nm");
    }
    t.rows.resize(epsilons.size());
    par::for_each_index(epsilons.size(), [&](std::size_t i) {
      std::vector<double> row{epsilons[i]};
      for (double w : options.widths_nm) {
        row.push_back(amplification_factor(profile_for(w),
                                           CouplingParams{options.tau_fixed_s, epsilons[i]}));
      }
      t.rows[i] = std::move(row);
    });
  }

  return tables;
}

}  // namespace wva
