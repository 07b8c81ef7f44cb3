#pragma once

#include <Eigen/Dense>

#include "emd/signal.hpp"

namespace emd {

/// Cosine/sine projections of a signal onto a probe tone over [t_lo, t_hi],
/// with the derived amplitude sqrt(p_cos^2 + p_sin^2).
struct ProjectionReport {
  double omega = 0.0;
  double t_lo = 0.0;
  double t_hi = 0.0;
  double p_cos = 0.0;
  double p_sin = 0.0;
  double amplitude = 0.0;
};

/// p_cos = integral of s(t) cos(omega t + probe_phase) dt (and the sine
/// counterpart) by trapezoidal quadrature over the grid samples, with
/// linearly interpolated partial cells where the interval ends fall between
/// samples.
ProjectionReport project_onto_tone(const SampledSignal& s, double omega, double t_lo,
                                   double t_hi, double probe_phase = 0.0);

/// Periodogram |DFT|^2 / n over positive frequencies after mean removal.
struct SpectrumReport {
  Eigen::ArrayXd freqs; // rad/time, uniform spacing bin_width
  Eigen::ArrayXd power;
  double peak_freq = 0.0;         // argmax bin centre
  double peak_power = 0.0;
  double peak_freq_refined = 0.0; // parabolic fit across the 3 bins at the peak
  double bin_width = 0.0;
};

SpectrumReport power_spectrum(const SampledSignal& s);

/// Distance of the refined spectral peak from a target frequency, in bins.
double spectral_peak_distance(const SpectrumReport& spec, double target_omega);

/// All local periodogram peaks with power at least min_rel_power times the
/// global maximum, as (refined frequency, power) pairs in frequency order.
std::vector<std::pair<double, double>> spectral_peaks(const SpectrumReport& spec,
                                                      double min_rel_power);

} // namespace emd
