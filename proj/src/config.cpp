#include "wva/config.hpp"

#include <cmath>
#include <fstream>
#include <functional>

#include "wva/errors.hpp"

namespace wva {

SpectralProfile RunConfig::profile() const {
  return from_wavelength(center_wavelength_nm * 1e-9, spectral_width_nm * 1e-9,
                         width_convention);
}

CouplingParams RunConfig::params() const {
  return CouplingParams{tau_as * 1e-18, epsilon_rad};
}

DetectorModel RunConfig::detector(const SpectralProfile& p) const {
  DetectorModel model;
  model.n_pixels = detector_pixels;
  model.range_low = p.omega0 - detector_span_sigmas * p.delta;
  model.range_high = p.omega0 + detector_span_sigmas * p.delta;
  model.resolution_sigma = resolution_sigma_fraction * p.delta;
  model.alignment_offset = alignment_offset_fraction * p.delta;
  model.photon_budget = photon_budget;
  return model;
}

StudyConfig RunConfig::study() const {
  StudyConfig s;
  s.n_trials = n_trials;
  s.base_seed = seed;
  s.method = method;
  s.noise = noise_mode;
  s.grid_span = grid_span;
  s.grid_points = grid_points;
  return s;
}

Figure2Options RunConfig::figure2_options() const {
  Figure2Options o;
  o.main_points = fig2_points;
  o.inset_points = fig2_inset_points;
  o.envelope_threshold = envelope_threshold;
  o.grid_span = grid_span;
  o.grid_points = grid_points;
  return o;
}

Figure3Options RunConfig::figure3_options() const {
  Figure3Options o;
  o.tau_fixed_s = tau_as * 1e-18;
  o.tau_min_s = fig3_tau_min_as * 1e-18;
  o.tau_max_s = fig3_tau_max_as * 1e-18;
  o.tau_points = fig3_tau_points;
  o.width_points = fig3_width_points;
  o.epsilon_points = fig3_epsilon_points;
  o.center_wavelength_m = center_wavelength_nm * 1e-9;
  o.convention = width_convention;
  return o;
}

void RunConfig::validate() const {
  const auto fail = [](const std::string& what) { throw ConfigError(what); };
  if (!(center_wavelength_nm > 0.0) || !std::isfinite(center_wavelength_nm)) {
    fail("center_wavelength_nm must be positive");
  }
  if (!(spectral_width_nm > 0.0) || !(spectral_width_nm < center_wavelength_nm)) {
    fail("spectral_width_nm must satisfy 0 < width < center_wavelength_nm");
  }
  if (!std::isfinite(epsilon_rad)) fail("epsilon_rad must be finite");
  if (!std::isfinite(tau_as)) fail("tau_as must be finite");
  if (!(grid_span >= 4.0)) fail("grid_span must be >= 4");
  if (grid_points < (std::size_t{1} << 10)) fail("grid_points must be >= 1024");
  if (!(envelope_threshold > 0.0 && envelope_threshold < 1.0)) {
    fail("envelope_threshold must lie in (0, 1)");
  }
  if (detector_pixels < 8) fail("detector_pixels must be >= 8");
  if (!(detector_span_sigmas > 0.0)) fail("detector_span_sigmas must be positive");
  if (!(resolution_sigma_fraction >= 0.0)) {
    fail("resolution_sigma_fraction must be nonnegative");
  }
  if (!std::isfinite(alignment_offset_fraction)) {
    fail("alignment_offset_fraction must be finite");
  }
  if (!(photon_budget > 0.0)) fail("photon_budget must be positive");
  if (n_trials < 2) fail("n_trials must be >= 2");
  if (fig2_points < 2 || fig2_inset_points < 2 || fig3_tau_points < 2 ||
      fig3_width_points < 2 || fig3_epsilon_points < 2) {
    fail("sweep point counts must be >= 2");
  }
  if (!(fig3_tau_min_as > 0.0) || !(fig3_tau_min_as < fig3_tau_max_as)) {
    fail("fig3 tau range must satisfy 0 < min < max");
  }
}

namespace {

std::string trim(const std::string& s) {
  const auto begin = s.find_first_not_of(" \t\r\n");
  if (begin == std::string::npos) return {};
  const auto end = s.find_last_not_of(" \t\r\n");
  return s.substr(begin, end - begin + 1);
}

double parse_double(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return v;
  } catch (const std::exception&) {
    throw ConfigError("invalid numeric value for key '" + key + "': " + value);
  }
}

std::size_t parse_size(const std::string& key, const std::string& value) {
  const double v = parse_double(key, value);
  if (v < 0.0 || v != static_cast<double>(static_cast<std::size_t>(v))) {
    throw ConfigError("key '" + key + "' requires a nonnegative integer");
  }
  return static_cast<std::size_t>(v);
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  try {
    std::size_t pos = 0;
    const unsigned long long v = std::stoull(value, &pos);
    if (pos != value.size()) throw std::invalid_argument("trailing characters");
    return static_cast<std::uint64_t>(v);
  } catch (const std::exception&) {
    throw ConfigError("key '" + key + "' requires an unsigned integer: " + value);
  }
}

}  // namespace

WidthConvention parse_width_convention(const std::string& text) {
  if (text == "amplitude-spread") return WidthConvention::amplitude_spread;
  if (text == "intensity-fwhm") return WidthConvention::intensity_fwhm;
  throw ConfigError("unknown width convention '" + text +
                    "' (expected amplitude-spread or intensity-fwhm)");
}

InversionMethod parse_method(const std::string& text) {
  if (text == "weak-limit") return InversionMethod::weak_limit;
  if (text == "exact-invert") return InversionMethod::exact_invert;
  throw ConfigError("unknown method '" + text +
                    "' (expected weak-limit or exact-invert)");
}

NoiseMode parse_noise_mode(const std::string& text) {
  if (text == "poisson") return NoiseMode::poisson;
  if (text == "expected-counts") return NoiseMode::expected_counts;
  if (text == "ideal") return NoiseMode::ideal;
  throw ConfigError("unknown noise mode '" + text +
                    "' (expected poisson, expected-counts or ideal)");
}

SpectrumVariant parse_spectrum_variant(const std::string& text) {
  if (text == "sine-sum") return SpectrumVariant::sine_sum;
  if (text == "cosine-difference") return SpectrumVariant::cosine_difference;
  throw ConfigError("unknown spectrum variant '" + text +
                    "' (expected sine-sum or cosine-difference)");
}

void apply_config_entry(RunConfig& config, const std::string& key,
                        const std::string& value) {
  static const std::map<std::string, std::function<void(RunConfig&, const std::string&)>>
      setters = {
          {"center_wavelength_nm",
           [](RunConfig& c, const std::string& v) {
             c.center_wavelength_nm = parse_double("center_wavelength_nm", v);
           }},
          {"spectral_width_nm",
           [](RunConfig& c, const std::string& v) {
             c.spectral_width_nm = parse_double("spectral_width_nm", v);
           }},
          {"width_convention",
           [](RunConfig& c, const std::string& v) {
             c.width_convention = parse_width_convention(v);
           }},
          {"spectrum_variant",
           [](RunConfig& c, const std::string& v) {
             c.spectrum_variant = parse_spectrum_variant(v);
           }},
          {"epsilon_rad",
           [](RunConfig& c, const std::string& v) {
             c.epsilon_rad = parse_double("epsilon_rad", v);
           }},
          {"tau_as",
           [](RunConfig& c, const std::string& v) { c.tau_as = parse_double("tau_as", v); }},
          {"grid_span",
           [](RunConfig& c, const std::string& v) {
             c.grid_span = parse_double("grid_span", v);
           }},
          {"grid_points",
           [](RunConfig& c, const std::string& v) {
             c.grid_points = parse_size("grid_points", v);
           }},
          {"envelope_threshold",
           [](RunConfig& c, const std::string& v) {
             c.envelope_threshold = parse_double("envelope_threshold", v);
           }},
          {"detector_pixels",
           [](RunConfig& c, const std::string& v) {
             c.detector_pixels = parse_size("detector_pixels", v);
           }},
          {"detector_span_sigmas",
           [](RunConfig& c, const std::string& v) {
             c.detector_span_sigmas = parse_double("detector_span_sigmas", v);
           }},
          {"resolution_sigma_fraction",
           [](RunConfig& c, const std::string& v) {
             c.resolution_sigma_fraction = parse_double("resolution_sigma_fraction", v);
           }},
          {"alignment_offset_fraction",
           [](RunConfig& c, const std::string& v) {
             c.alignment_offset_fraction = parse_double("alignment_offset_fraction", v);
           }},
          {"photon_budget",
           [](RunConfig& c, const std::string& v) {
             c.photon_budget = parse_double("photon_budget", v);
           }},
          {"n_trials",
           [](RunConfig& c, const std::string& v) { c.n_trials = parse_size("n_trials", v); }},
          {"method",
           [](RunConfig& c, const std::string& v) { c.method = parse_method(v); }},
          {"noise_mode",
           [](RunConfig& c, const std::string& v) { c.noise_mode = parse_noise_mode(v); }},
          {"seed",
           [](RunConfig& c, const std::string& v) { c.seed = parse_u64("seed", v); }},
          {"fig2_points",
           [](RunConfig& c, const std::string& v) {
             c.fig2_points = parse_size("fig2_points", v);
           }},
          {"fig2_inset_points",
           [](RunConfig& c, const std::string& v) {
             c.fig2_inset_points = parse_size("fig2_inset_points", v);
           }},
          {"fig3_tau_min_as",
           [](RunConfig& c, const std::string& v) {
             c.fig3_tau_min_as = parse_double("fig3_tau_min_as", v);
           }},
          {"fig3_tau_max_as",
           [](RunConfig& c, const std::string& v) {
             c.fig3_tau_max_as = parse_double("fig3_tau_max_as", v);
           }},
          {"fig3_tau_points",
           [](RunConfig& c, const std::string& v) {
             c.fig3_tau_points = parse_size("fig3_tau_points", v);
           }},
          {"fig3_width_points",
           [](RunConfig& c, const std::string& v) {
             c.fig3_width_points = parse_size("fig3_width_points", v);
           }},
          {"fig3_epsilon_points",
           [](RunConfig& c, const std::string& v) {
             c.fig3_epsilon_points = parse_size("fig3_epsilon_points", v);
           }},
      };

  const auto it = setters.find(key);
  if (it == setters.end()) {
    throw ConfigError("unknown config key '" + key + "'");
  }
  it->second(config, value);
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream file(path);
  if (!file) {
    throw ConfigError("cannot open config file: " + path);
  }
  RunConfig config;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(file, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const std::string trimmed = trim(line);
    if (trimmed.empty()) continue;
    const auto eq = trimmed.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("malformed line " + std::to_string(line_no) + " in " + path +
                        " (expected key = value)");
    }
    const std::string key = trim(trimmed.substr(0, eq));
    const std::string value = trim(trimmed.substr(eq + 1));
    if (key.empty() || value.empty()) {
      throw ConfigError("malformed line " + std::to_string(line_no) + " in " + path);
    }
    apply_config_entry(config, key, value);
  }
  return config;
}

}  // namespace wva
