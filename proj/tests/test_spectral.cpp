#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "emd/errors.hpp"
#include "emd/quadrature.hpp"
#include "emd/spectral.hpp"

using namespace emd;
namespace {
constexpr double kPi = std::numbers::pi;
constexpr double kW0 = kPi / 256.0;
} // namespace

TEST_CASE("projection of a tone onto itself over one period") {
  const double omega = 1.7;
  const double span = 2.0 * kPi / omega;
  const double dt = span / 2000.0;
  ToneRecipe r;
  r.tones = {{1.0, omega, 0.0}};
  const SampledSignal s = synthesize(r, make_grid(0.0, span, dt));
  const ProjectionReport rep = project_onto_tone(s, omega, 0.0, span);
  CHECK(rep.p_cos == doctest::Approx(kPi / omega).epsilon(10 * dt * dt));
  CHECK(std::abs(rep.p_sin) < 10 * dt * dt);
  CHECK(rep.amplitude == doctest::Approx(std::hypot(rep.p_cos, rep.p_sin)).epsilon(1e-12));

  // sine input against the cosine probe integrates to 0 over a full period
  ToneRecipe rs;
  rs.tones = {{1.0, omega, -kPi / 2}}; // sin(wt) = cos(wt - pi/2)
  const SampledSignal ss = synthesize(rs, make_grid(0.0, span, dt));
  CHECK(std::abs(project_onto_tone(ss, omega, 0.0, span).p_cos) < 10 * dt * dt);
}

TEST_CASE("projection handles partial cells at interval ends") {
  // interval ends fall strictly between samples; compare against adaptive
  // quadrature of the continuous integrand
  ToneRecipe r;
  r.tones = {{1.0, 1.1, 0.3}};
  const double dt = 5e-4;
  const SampledSignal s = synthesize(r, make_grid(0.0, 9.0, dt));
  const double lo = 0.3001234, hi = 7.8991117;
  const ProjectionReport rep = project_onto_tone(s, 1.0, lo, hi);
  const double exact =
      integrate([](double t) { return std::cos(1.1 * t + 0.3) * std::cos(t); }, lo, hi, 1e-12);
  CHECK(rep.p_cos == doctest::Approx(exact).epsilon(1e-6));
}

TEST_CASE("projection interval must lie inside the grid") {
  ToneRecipe r;
  r.tones = {{1.0, 1.0, 0.0}};
  const SampledSignal s = synthesize(r, make_grid(0.0, 10.0, 0.1));
  CHECK_THROWS_AS(project_onto_tone(s, 1.0, -0.5, 5.0), IntervalOutOfRange);
  CHECK_THROWS_AS(project_onto_tone(s, 1.0, 5.0, 10.5), IntervalOutOfRange);
  CHECK_THROWS_AS(project_onto_tone(s, 1.0, 5.0, 5.0), IntervalOutOfRange);
}

TEST_CASE("projection is linear in the signal") {
  std::mt19937 rng(5);
  std::uniform_real_distribution<double> amp(0.3, 1.2), freq(0.5, 2.5);
  const TimeGrid g = make_grid(0.0, 20.0, 0.01);
  ToneRecipe a, b;
  a.tones = {{amp(rng), freq(rng), 0.2}};
  b.tones = {{amp(rng), freq(rng), 1.2}};
  const SampledSignal sa = synthesize(a, g), sb = synthesize(b, g);
  SampledSignal sum{g, sa.values + sb.values};
  const double pa = project_onto_tone(sa, 1.0, 1.0, 19.0).p_cos;
  const double pb = project_onto_tone(sb, 1.0, 1.0, 19.0).p_cos;
  const double ps = project_onto_tone(sum, 1.0, 1.0, 19.0).p_cos;
  CHECK(ps == doctest::Approx(pa + pb).epsilon(1e-12));
}

TEST_CASE("amplitude is invariant under a probe phase shift") {
  ToneRecipe r;
  r.tones = {{1.0, 0.9, 0.4}, {0.5, 1.4, 1.9}};
  const SampledSignal s = synthesize(r, make_grid(0.0, 40.0, 0.02));
  const ProjectionReport base = project_onto_tone(s, 0.9, 2.0, 38.0, 0.0);
  for (double phase : {0.3, 1.1, 2.9}) {
    const ProjectionReport shifted = project_onto_tone(s, 0.9, 2.0, 38.0, phase);
    CHECK(shifted.amplitude == doctest::Approx(base.amplitude).epsilon(1e-10));
  }
}

TEST_CASE("periodogram of a single tone peaks within one bin") {
  ToneRecipe r;
  r.tones = {{1.0, 12.0 * kW0, 0.0}};
  const SampledSignal s = synthesize(r, make_grid(-2048.0, 2048.0, 1.0));
  const SpectrumReport spec = power_spectrum(s);
  CHECK(std::abs(spec.peak_freq - 12.0 * kW0) <= spec.bin_width);
  CHECK(spectral_peak_distance(spec, 12.0 * kW0) <= 0.5);
  CHECK(spec.bin_width == doctest::Approx(2.0 * kPi / 4097.0).epsilon(1e-12));
}

TEST_CASE("three-tone periodogram shows three dominant peaks") {
  ToneRecipe r;
  r.tones = {{1.0 / 3, 12 * kW0, 0.0}, {1.0 / 3, 10 * kW0, 0.0}, {1.0 / 3, 8 * kW0, 0.0}};
  const SampledSignal s = synthesize(r, make_grid(-2048.0, 2048.0, 1.0));
  const SpectrumReport spec = power_spectrum(s);
  const auto peaks = spectral_peaks(spec, 0.2);
  REQUIRE(peaks.size() == 3);
  const double targets[3] = {8 * kW0, 10 * kW0, 12 * kW0};
  for (int i = 0; i < 3; ++i)
    CHECK(std::abs(peaks[i].first - targets[i]) <= spec.bin_width);
}

TEST_CASE("zero signal has an all-zero periodogram") {
  SampledSignal s{make_grid(0.0, 63.0, 1.0), Eigen::ArrayXd::Zero(64)};
  const SpectrumReport spec = power_spectrum(s);
  CHECK(spec.power.maxCoeff() == 0.0);
  CHECK(spec.power.minCoeff() == 0.0);
}

TEST_CASE("periodogram needs at least four samples") {
  SampledSignal s{make_grid(0.0, 2.0, 1.0), Eigen::ArrayXd::Zero(3)};
  CHECK_THROWS_AS(power_spectrum(s), Error);
}

TEST_CASE("Parseval consistency after mean removal") {
  std::mt19937 rng(17);
  std::uniform_real_distribution<double> amp(0.2, 1.0), freq(0.05, 1.5), phase(0.0, 2 * kPi);
  ToneRecipe r;
  for (int i = 0; i < 4; ++i) r.tones.push_back({amp(rng), freq(rng), phase(rng)});
  const SampledSignal s = synthesize(r, make_grid(0.0, 1023.0, 1.0)); // even n, Nyquist bin
  const SpectrumReport spec = power_spectrum(s);

  const Eigen::ArrayXd centered = s.values - s.values.mean();
  const double energy = centered.square().sum();
  const Eigen::Index n = s.values.size();
  double spectral_sum = 0.0;
  for (Eigen::Index m = 0; m < spec.power.size(); ++m) {
    const bool nyquist = (n % 2 == 0) && (m == spec.power.size() - 1);
    spectral_sum += (nyquist ? 1.0 : 2.0) * spec.power[m];
  }
  CHECK(spectral_sum == doctest::Approx(energy).epsilon(1e-9));

  // and the quadrature-weighted energy agrees with the plain sum up to
  // boundary terms
  SampledSignal c{s.grid, centered};
  const double quad_energy = std::pow(signal_norm(c, Norm::L2), 2) / s.grid.dt;
  CHECK(quad_energy == doctest::Approx(energy).epsilon(1e-2));
}

TEST_CASE("peak distance with a tone centred on a bin and halfway between bins") {
  const Eigen::Index n = 4096;
  const double dt = 1.0;
  const double bin = 2.0 * kPi / (n * dt);

  ToneRecipe centred;
  centred.tones = {{1.0, 200.0 * bin, 0.0}};
  const SampledSignal sc = synthesize(centred, make_grid(0.0, static_cast<double>(n - 1), dt));
  CHECK(spectral_peak_distance(power_spectrum(sc), 200.0 * bin) < 1e-6);

  ToneRecipe halfway;
  halfway.tones = {{1.0, 200.5 * bin, 0.0}};
  const SampledSignal sh = synthesize(halfway, make_grid(0.0, static_cast<double>(n - 1), dt));
  CHECK(spectral_peak_distance(power_spectrum(sh), 200.5 * bin) <= 0.5);
}
