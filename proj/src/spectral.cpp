#include "emd/spectral.hpp"

#include <cmath>
#include <complex>
#include <vector>

#include <unsupported/Eigen/FFT>

#include "emd/errors.hpp"
#include "emd/extrema.hpp"

namespace emd {

ProjectionReport project_onto_tone(const SampledSignal& s, double omega, double t_lo,
                                   double t_hi, double probe_phase) {
  const TimeGrid& g = s.grid;
  const double tol = 1e-9 * g.dt;
  if (t_lo < g.t_start - tol || t_hi > g.t_end() + tol || !(t_lo < t_hi))
    throw IntervalOutOfRange("project_onto_tone: interval outside grid span");

  // Quadrature nodes: the interval ends plus every sample strictly inside.
  const auto node_value = [&](double t) { return sample_linear(s, t); };
  const Eigen::Index k_first = static_cast<Eigen::Index>(std::ceil((t_lo - g.t_start) / g.dt - 1e-9));
  const Eigen::Index k_last = static_cast<Eigen::Index>(std::floor((t_hi - g.t_start) / g.dt + 1e-9));

  double p_cos = 0.0, p_sin = 0.0;
  double prev_t = t_lo;
  double prev_v = node_value(std::max(t_lo, g.t_start));
  auto accumulate = [&](double t, double v) {
    const double h = t - prev_t;
    if (h > 0.0) {
      p_cos += 0.5 * h * (prev_v * std::cos(omega * prev_t + probe_phase) +
                          v * std::cos(omega * t + probe_phase));
      p_sin += 0.5 * h * (prev_v * std::sin(omega * prev_t + probe_phase) +
                          v * std::sin(omega * t + probe_phase));
    }
    prev_t = t;
    prev_v = v;
  };

  for (Eigen::Index k = k_first; k <= k_last; ++k) {
    const double t = g.t(k);
    if (t <= prev_t) continue;
    if (t >= t_hi) break;
    accumulate(t, s.values[k]);
  }
  accumulate(t_hi, node_value(std::min(t_hi, g.t_end())));

  ProjectionReport rep;
  rep.omega = omega;
  rep.t_lo = t_lo;
  rep.t_hi = t_hi;
  rep.p_cos = p_cos;
  rep.p_sin = p_sin;
  rep.amplitude = std::hypot(p_cos, p_sin);
  return rep;
}

SpectrumReport power_spectrum(const SampledSignal& s) {
  const Eigen::Index n = s.values.size();
  if (n < 4) throw Error("power_spectrum: need at least 4 samples");

  std::vector<double> centered(static_cast<std::size_t>(n));
  const double mean = s.values.mean();
  for (Eigen::Index k = 0; k < n; ++k) centered[static_cast<std::size_t>(k)] = s.values[k] - mean;

  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> bins;
  fft.fwd(bins, centered);

  const Eigen::Index n_pos = n / 2; // positive-frequency bins 1..n/2
  SpectrumReport rep;
  rep.bin_width = 2.0 * M_PI / (static_cast<double>(n) * s.grid.dt);
  rep.freqs.resize(n_pos);
  rep.power.resize(n_pos);
  Eigen::Index peak = 0;
  for (Eigen::Index m = 1; m <= n_pos; ++m) {
    rep.freqs[m - 1] = rep.bin_width * static_cast<double>(m);
    rep.power[m - 1] = std::norm(bins[static_cast<std::size_t>(m)]) / static_cast<double>(n);
    if (rep.power[m - 1] > rep.power[peak]) peak = m - 1;
  }
  rep.peak_freq = rep.freqs[peak];
  rep.peak_power = rep.power[peak];

  rep.peak_freq_refined = rep.peak_freq;
  if (peak > 0 && peak + 1 < n_pos) {
    const double pl = rep.power[peak - 1];
    const double pc = rep.power[peak];
    const double pr = rep.power[peak + 1];
    const double denom = pl - 2.0 * pc + pr;
    if (denom < 0.0) {
      double delta = 0.5 * (pl - pr) / denom;
      delta = std::clamp(delta, -0.5, 0.5);
      rep.peak_freq_refined = rep.peak_freq + delta * rep.bin_width;
    }
  }
  return rep;
}

double spectral_peak_distance(const SpectrumReport& spec, double target_omega) {
  return std::abs(spec.peak_freq_refined - target_omega) / spec.bin_width;
}

std::vector<std::pair<double, double>> spectral_peaks(const SpectrumReport& spec,
                                                      double min_rel_power) {
  std::vector<std::pair<double, double>> peaks;
  const double floor = min_rel_power * spec.peak_power;
  for (Eigen::Index m = 1; m + 1 < spec.power.size(); ++m) {
    if (spec.power[m] < floor) continue;
    if (!(spec.power[m] > spec.power[m - 1]) || !(spec.power[m] >= spec.power[m + 1])) continue;
    double freq = spec.freqs[m];
    const double denom = spec.power[m - 1] - 2.0 * spec.power[m] + spec.power[m + 1];
    if (denom < 0.0) {
      const double delta =
          std::clamp(0.5 * (spec.power[m - 1] - spec.power[m + 1]) / denom, -0.5, 0.5);
      freq += delta * spec.bin_width;
    }
    peaks.emplace_back(freq, spec.power[m]);
  }
  return peaks;
}

} // namespace emd
