#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "wva/config.hpp"
#include "wva/errors.hpp"
#include "wva/io.hpp"
#include "wva/parallel.hpp"
#include "wva/report.hpp"
#include "wva/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitRuntime = 3;
constexpr int kExitIo = 4;

struct CliOverrides {
  std::optional<std::string> config_path;
  std::optional<std::uint64_t> seed;
  std::optional<double> epsilon;
  std::optional<double> tau_as;
  std::optional<double> center_wavelength_nm;
  std::optional<double> spectral_width_nm;
  std::optional<std::string> width_convention;
  std::optional<std::size_t> grid_points;
  std::optional<double> grid_span;
  std::optional<std::size_t> n_trials;
  std::optional<double> photon_budget;
  std::optional<std::string> method;
  std::optional<std::string> noise_mode;
};

void add_common_options(CLI::App* cmd, CliOverrides& o, std::string& out_path) {
  cmd->add_option("--config", o.config_path, "key = value config file");
  cmd->add_option("--out", out_path, "output path");
  cmd->add_option("--seed", o.seed, "base random seed");
  cmd->add_option("--epsilon", o.epsilon, "postselection angle, radians");
  cmd->add_option("--tau", o.tau_as, "time delay, attoseconds");
  cmd->add_option("--center-wavelength-nm", o.center_wavelength_nm,
                  "source center wavelength, nm");
  cmd->add_option("--spectral-width-nm", o.spectral_width_nm, "spectral width, nm");
  cmd->add_option("--width-convention", o.width_convention,
                  "amplitude-spread | intensity-fwhm");
  cmd->add_option("--grid-points", o.grid_points, "frequency grid points");
  cmd->add_option("--grid-span", o.grid_span, "grid half-width in units of delta");
  cmd->add_option("--n-trials", o.n_trials, "Monte Carlo trials");
  cmd->add_option("--photon-budget", o.photon_budget, "expected source photons");
  cmd->add_option("--method", o.method, "weak-limit | exact-invert");
  cmd->add_option("--noise-mode", o.noise_mode, "poisson | expected-counts | ideal");
}

wva::RunConfig resolve_config(const CliOverrides& o) {
  wva::RunConfig config;
  if (o.config_path) config = wva::load_config_file(*o.config_path);
  if (o.seed) config.seed = *o.seed;
  if (o.epsilon) config.epsilon_rad = *o.epsilon;
  if (o.tau_as) config.tau_as = *o.tau_as;
  if (o.center_wavelength_nm) config.center_wavelength_nm = *o.center_wavelength_nm;
  if (o.spectral_width_nm) config.spectral_width_nm = *o.spectral_width_nm;
  if (o.width_convention)
    config.width_convention = wva::parse_width_convention(*o.width_convention);
  if (o.grid_points) config.grid_points = *o.grid_points;
  if (o.grid_span) config.grid_span = *o.grid_span;
  if (o.n_trials) config.n_trials = *o.n_trials;
  if (o.photon_budget) config.photon_budget = *o.photon_budget;
  if (o.method) config.method = wva::parse_method(*o.method);
  if (o.noise_mode) config.noise_mode = wva::parse_noise_mode(*o.noise_mode);
  config.validate();
  return config;
}

int run_figure2(const CliOverrides& o, const std::string& out_path) {
  const wva::RunConfig config = resolve_config(o);
  const wva::SweepTable table = wva::figure2_table(
      config.profile(), config.epsilon_rad, config.figure2_options());
  wva::write_csv(out_path, table);
  std::cout << "figure2: wrote " << table.rows.size() << " rows to " << out_path << "\n";
  return kExitOk;
}

int run_figure3(const CliOverrides& o, const std::string& out_prefix) {
  const wva::RunConfig config = resolve_config(o);
  const auto tables = wva::figure3_tables(config.figure3_options());
  const char* suffix[] = {"_a.csv", "_b.csv", "_c.csv", "_d.csv"};
  for (std::size_t i = 0; i < tables.size(); ++i) {
    wva::write_csv(out_prefix + suffix[i], tables[i]);
  }
  std::cout << "figure3: wrote panels a-d with prefix " << out_prefix << "\n";
  return kExitOk;
}

int run_simulate(const CliOverrides& o, const std::string& out_path) {
  const wva::RunConfig config = resolve_config(o);
  const std::string json = wva::simulation_report_json(config);
  if (!out_path.empty()) wva::write_text(out_path, json);
  std::cout << json;
  return kExitOk;
}

int run_estimate(const CliOverrides& o, const std::string& out_path) {
  const wva::RunConfig config = resolve_config(o);
  const wva::SpectralProfile profile = config.profile();
  const wva::EstimationReport report = wva::monte_carlo_study(
      profile, config.params(), config.detector(profile), config.study());
  const std::string json = wva::estimation_report_json(config, report);
  if (!out_path.empty()) wva::write_text(out_path, json);
  std::printf("estimate: tau_true = %.6e s, tau_hat = %.6e s, bias = %.6e s, "
              "std = %.6e s (%zu trials, %zu failed)\n",
              report.tau_true, report.tau_hat, report.bias, report.std_dev,
              report.n_trials, report.n_failed);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"frequency-domain weak-value amplification simulator"};
  app.require_subcommand(1);

  bool serial = false;
  app.add_flag("--serial", serial, "run the kernels single-threaded");

  CliOverrides o_fig2, o_fig3, o_sim, o_est;
  std::string out_fig2 = "figure2.csv";
  std::string out_fig3 = "figure3";
  std::string out_sim;
  std::string out_est;

  CLI::App* fig2 = app.add_subcommand("figure2", "postselection probability vs delay");
  add_common_options(fig2, o_fig2, out_fig2);
  CLI::App* fig3 = app.add_subcommand("figure3", "shift and gain sweep panels");
  add_common_options(fig3, o_fig3, out_fig3);
  CLI::App* sim = app.add_subcommand("simulate", "single (tau, epsilon) report");
  add_common_options(sim, o_sim, out_sim);
  CLI::App* est = app.add_subcommand("estimate", "Monte Carlo delay estimation study");
  add_common_options(est, o_est, out_est);
  for (CLI::App* sub : {fig2, fig3, sim, est}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  if (serial) wva::par::set_mode(wva::par::ExecMode::serial);

  try {
    if (fig2->parsed()) return run_figure2(o_fig2, out_fig2);
    if (fig3->parsed()) return run_figure3(o_fig3, out_fig3);
    if (sim->parsed()) return run_simulate(o_sim, out_sim);
    if (est->parsed()) return run_estimate(o_est, out_est);
  } catch (const wva::ConfigError& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return kExitConfig;
  } catch (const wva::IoError& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return kExitIo;
  } catch (const wva::Error& e) {
    std::cerr << "error: " << e.name() << ": " << e.what() << "\n";
    return kExitRuntime;
  } catch (const std::exception& e) {
    std::cerr << "error: internal: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitOk;
}
