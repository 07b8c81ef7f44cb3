#pragma once

#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "emd/time_grid.hpp"

namespace emd {

/// One cosine component: amplitude * cos(omega * t + phase).
struct Tone {
  double amplitude = 1.0;
  double omega = 1.0; // rad/time, > 0
  double phase = 0.0; // rad
};

/// Deterministic perturbation tone: amplitude * cos(omega * t).
struct NoiseTone {
  double amplitude = 0.0;
  double omega = 1.0;
};

/// Parametric multi-tone signal, optionally with a perturbation tone.
struct ToneRecipe {
  std::vector<Tone> tones;
  std::optional<NoiseTone> noise;

  /// Continuous evaluation; the sampled path must agree with this exactly
  /// at grid times.
  double operator()(double t) const;
};

/// Uniformly sampled time series; values.size() == grid.n.
struct SampledSignal {
  TimeGrid grid;
  Eigen::ArrayXd values;
};

/// Samples the recipe on the grid.
SampledSignal synthesize(const ToneRecipe& recipe, const TimeGrid& grid);

enum class Norm { L1, L2, Sup };

/// Discrete norm. L1 and L2 carry trapezoidal quadrature weights times dt,
/// so they approximate the continuous integral norms; Sup is max |v|.
double signal_norm(const SampledSignal& s, Norm kind);

} // namespace emd
