#include "emd/signal.hpp"

#include <cmath>

#include "emd/errors.hpp"

namespace emd {

double ToneRecipe::operator()(double t) const {
  double v = 0.0;
  for (const Tone& tone : tones) v += tone.amplitude * std::cos(tone.omega * t + tone.phase);
  if (noise) v += noise->amplitude * std::cos(noise->omega * t);
  return v;
}

SampledSignal synthesize(const ToneRecipe& recipe, const TimeGrid& grid) {
  if (recipe.tones.empty())
    throw Error("synthesize: recipe has no tones");
  for (const Tone& tone : recipe.tones)
    if (!(tone.omega > 0.0))
      throw Error("synthesize: tone frequency must be positive");
  if (recipe.noise && !(recipe.noise->omega > 0.0))
    throw Error("synthesize: noise frequency must be positive");

  SampledSignal s;
  s.grid = grid;
  s.values.resize(grid.n);
  for (Eigen::Index k = 0; k < grid.n; ++k) s.values[k] = recipe(grid.t(k));
  return s;
}

double signal_norm(const SampledSignal& s, Norm kind) {
  const Eigen::Index n = s.values.size();
  if (n == 0) return 0.0;
  switch (kind) {
    case Norm::Sup:
      return s.values.abs().maxCoeff();
    case Norm::L1: {
      double acc = s.values.abs().sum();
      acc -= 0.5 * (std::abs(s.values[0]) + std::abs(s.values[n - 1]));
      return acc * s.grid.dt;
    }
    case Norm::L2: {
      double acc = s.values.square().sum();
      acc -= 0.5 * (s.values[0] * s.values[0] + s.values[n - 1] * s.values[n - 1]);
      return std::sqrt(acc * s.grid.dt);
    }
  }
  return 0.0;
}

} // namespace emd
