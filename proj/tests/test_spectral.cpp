#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "wva/errors.hpp"
#include "wva/spectral.hpp"

using namespace wva;

TEST_CASE("gaussian_profile density peak and moments") {
  const SpectralProfile p = gaussian_profile(3.1416e15, 5.236e14);
  // |f(omega0)|^2 = (pi delta^2)^{-1/2}
  const double peak = 1.0 / (p.delta * std::sqrt(std::numbers::pi));
  CHECK(p.density(p.omega0) == doctest::Approx(peak).epsilon(1e-13));
  CHECK(p.density(p.omega0) == doctest::Approx(1.0775e-15).epsilon(1e-3));

  const SpectralGrid grid = sample_grid(p);
  const GridMoments m = grid_moments(grid);
  CHECK(m.mean == doctest::Approx(p.omega0).epsilon(1e-9));
  CHECK(m.variance == doctest::Approx(0.5 * p.delta * p.delta).epsilon(1e-6));

  CHECK_THROWS_AS(gaussian_profile(1.0, -1.0), InvalidParameterError);
  CHECK_THROWS_AS(gaussian_profile(0.0, 1.0), InvalidParameterError);
}

TEST_CASE("from_wavelength converts with exact c") {
  const SpectralProfile p =
      from_wavelength(600e-9, 100e-9, WidthConvention::amplitude_spread);
  const double two_pi_c = 2.0 * std::numbers::pi * 299792458.0;
  CHECK(p.omega0 == doctest::Approx(two_pi_c / 600e-9).epsilon(1e-15));
  CHECK(p.omega0 == doctest::Approx(3.13943e15).epsilon(1e-5));
  CHECK(p.delta == doctest::Approx(two_pi_c * 100e-9 / (600e-9 * 600e-9)).epsilon(1e-15));
  CHECK(p.delta == doctest::Approx(5.23237e14).epsilon(1e-5));

  CHECK_THROWS_AS(from_wavelength(600e-9, 0.0, WidthConvention::amplitude_spread),
                  InvalidParameterError);
  CHECK_THROWS_AS(from_wavelength(600e-9, 700e-9, WidthConvention::amplitude_spread),
                  InvalidParameterError);
}

TEST_CASE("intensity-fwhm convention maps the width as FWHM of |f|^2") {
  const SpectralProfile amp =
      from_wavelength(600e-9, 100e-9, WidthConvention::amplitude_spread);
  const SpectralProfile fwhm =
      from_wavelength(600e-9, 100e-9, WidthConvention::intensity_fwhm);
  // |f|^2 has variance delta^2/2, so its FWHM is 2 sqrt(ln 2) delta; the
  // conventions differ by that factor.
  CHECK(amp.delta / fwhm.delta ==
        doctest::Approx(2.0 * std::sqrt(std::numbers::ln2)).epsilon(1e-14));

  // Check the FWHM claim directly on the density.
  const double half_peak = 0.5 * fwhm.density(fwhm.omega0);
  const double requested_fwhm = 2.0 * std::numbers::pi * 299792458.0 * 100e-9 / (600e-9 * 600e-9);
  CHECK(fwhm.density(fwhm.omega0 + 0.5 * requested_fwhm) ==
        doctest::Approx(half_peak).epsilon(1e-12));
}

TEST_CASE("from_wavelength is monotone in the width for both conventions") {
  for (const auto convention :
       {WidthConvention::amplitude_spread, WidthConvention::intensity_fwhm}) {
    double prev = 0.0;
    for (double nm = 5.0; nm <= 200.0; nm += 5.0) {
      const SpectralProfile p = from_wavelength(600e-9, nm * 1e-9, convention);
      CHECK(p.delta > prev);
      prev = p.delta;
    }
  }
}

TEST_CASE("sample_grid normalization, symmetry and guards") {
  const SpectralProfile p = gaussian_profile(3.1416e15, 5.236e14);
  const SpectralGrid grid = sample_grid(p, 8.0, std::size_t{1} << 14);
  CHECK(std::abs(grid_total_weight(grid) - 1.0) < 1e-9);
  CHECK(std::abs(grid_moments(grid).mean - p.omega0) < 1e-9 * p.delta);

  CHECK_THROWS_AS(sample_grid(p, 2.0, std::size_t{1} << 14), InvalidParameterError);
  CHECK_THROWS_AS(sample_grid(p, 8.0, 512), InvalidParameterError);
}

TEST_CASE("sample_grid clips symmetrically near zero frequency") {
  // omega0/delta = 6 with span 8 would cross zero; both edges shrink.
  const SpectralProfile p = gaussian_profile(6.0, 1.0);
  const SpectralGrid grid = sample_grid(p, 8.0, std::size_t{1} << 14);
  CHECK(grid.omegas().front() > 0.0);
  CHECK(std::abs((p.omega0 - grid.omegas().front()) -
                 (grid.omegas().back() - p.omega0)) < 1e-12 * p.delta);
  CHECK(std::abs(grid_total_weight(grid) - 1.0) < 1e-9);
  CHECK(std::abs(grid_moments(grid).mean - p.omega0) < 1e-9 * p.delta);
}

TEST_CASE("grid refinement converges") {
  const SpectralProfile p = gaussian_profile(3.1416e15, 5.236e14);
  const SpectralGrid coarse = sample_grid(p, 8.0, std::size_t{1} << 14);
  const SpectralGrid fine = sample_grid(p, 8.0, std::size_t{1} << 15);
  CHECK(std::abs(grid_total_weight(coarse) - grid_total_weight(fine)) < 1e-10);
  const GridMoments mc = grid_moments(coarse);
  const GridMoments mf = grid_moments(fine);
  CHECK(std::abs(mc.mean - mf.mean) < 1e-10 * mf.mean);
  CHECK(std::abs(mc.variance - mf.variance) < 1e-10 * mf.variance);
}

TEST_CASE("grid_moments on hand-made grids") {
  const SpectralGrid two = SpectralGrid::from_samples({1.0, 3.0}, {0.5, 0.5}, 2.0);
  const GridMoments m = grid_moments(two);
  CHECK(m.mean == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(m.variance == doctest::Approx(1.0).epsilon(1e-15));

  const SpectralGrid dead = SpectralGrid::from_samples({1.0, 3.0}, {0.0, 0.0}, 2.0);
  CHECK_THROWS_AS(grid_moments(dead), EmptySpectrumError);
}

TEST_CASE("time_domain_dual is the reciprocal spread") {
  const SpectralProfile p = gaussian_profile(3.1416e15, 5.236e14);
  const TimeDomainProbe probe = time_domain_dual(p);
  CHECK(probe.sigma == doctest::Approx(1.9099e-15).epsilon(1e-4));

  CHECK(time_domain_dual(gaussian_profile(1.0, 1.0)).sigma == doctest::Approx(1.0));

  const SpectralProfile back = spectral_dual(probe, p.omega0);
  CHECK(std::abs(back.delta - p.delta) < 1e-12 * p.delta);
}

TEST_CASE("discrete Fourier transform confirms the time-domain width") {
  // Independent route: DFT the sampled amplitude f(omega) and measure the
  // spread of |g(t)|^2. Expected sigma = 1/delta (its density has variance
  // sigma^2/2).
  const SpectralProfile p = gaussian_profile(3.0e15, 4.0e14);
  const SpectralGrid grid = sample_grid(p, 8.0, 4096);
  const double sigma_expected = 1.0 / p.delta;

  const std::size_t nt = 1024;
  const double t_span = 6.0 * sigma_expected;
  std::vector<double> density(nt);
  std::vector<double> times(nt);
  const auto omegas = grid.omegas();
  for (std::size_t k = 0; k < nt; ++k) {
    const double t = -t_span + 2.0 * t_span * static_cast<double>(k) /
                                   static_cast<double>(nt - 1);
    times[k] = t;
    std::complex<double> acc(0.0, 0.0);
    for (std::size_t j = 0; j < omegas.size(); ++j) {
      // Integrate against the carrier-removed phase so |g| is sampled on a
      // resolvable envelope; |g| is unaffected by the carrier.
      acc += p.amplitude(omegas[j]) *
             std::exp(std::complex<double>(0.0, -(omegas[j] - p.omega0) * t));
    }
    density[k] = std::norm(acc * grid.bin_width() / std::sqrt(2.0 * std::numbers::pi));
  }

  double mass = 0.0, mean = 0.0;
  for (std::size_t k = 0; k < nt; ++k) {
    mass += density[k];
    mean += times[k] * density[k];
  }
  mean /= mass;
  double var = 0.0;
  for (std::size_t k = 0; k < nt; ++k) {
    var += (times[k] - mean) * (times[k] - mean) * density[k];
  }
  var /= mass;
  const double sigma_measured = std::sqrt(2.0 * var);
  CHECK(sigma_measured == doctest::Approx(sigma_expected).epsilon(0.01));
}
