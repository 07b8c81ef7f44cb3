#pragma once

#include <vector>

#include "emd/interpolant.hpp"
#include "emd/signal.hpp"

namespace emd {

enum class SiftMethod { Classical, Midpoint, Hybrid };

enum class InterpKind { Spline, Lagrange1, Lagrange2, Lagrange3 };

enum class ConvNorm { L2Rel, SD };

struct SiftConfig {
  SiftMethod method = SiftMethod::Midpoint;
  InterpKind interp = InterpKind::Spline;
  double conv_epsilon = 1e-3;
  ConvNorm conv_norm = ConvNorm::SD;
  int max_sift_iters = 200;
  int max_imfs = 10;
  /// Refine extremum locations to sub-sample accuracy (parabola through the
  /// three samples at each extremum) before computing midpoints and
  /// envelopes. Without it the sample-quantization noise in the knot values
  /// sets a convergence floor and can block close-frequency separation.
  bool refine_extrema = true;
};

/// Running cost counters; classical sifting fits two interpolants per
/// iteration, midpoint one, hybrid three.
struct SiftCounters {
  long interpolant_fits = 0;
};

struct Imf {
  SampledSignal signal;
  int sift_iterations = 0;
  bool converged = false;
  long interpolant_fits = 0;
};

struct Decomposition {
  std::vector<Imf> imfs;
  SampledSignal residue;
  SiftConfig config;
  long interpolant_fits = 0;
};

/// The curve subtracted by one sifting step, sampled on the signal's grid:
/// classical takes the mean of the max/min envelopes, midpoint the curve
/// through the between-extrema midpoints, hybrid the average of the two.
/// Envelope knots are mirror-extended across the grid ends before fitting.
SampledSignal sifting_function(const SampledSignal& s, const SiftConfig& cfg,
                               SiftCounters* counters = nullptr);

/// One sifting step: s minus its sifting function.
SampledSignal sift_once(const SampledSignal& s, const SiftConfig& cfg,
                        SiftCounters* counters = nullptr);

/// Iterates sifting until the relative change drops below cfg.conv_epsilon
/// or the iteration cap is reached.
Imf extract_imf(const SampledSignal& s, const SiftConfig& cfg);

/// Full decomposition: extract IMFs from the running residue until it has
/// no extrema pair left or max_imfs is reached. The IMFs plus the residue
/// always sum back to the input.
Decomposition decompose(const SampledSignal& s, const SiftConfig& cfg);

} // namespace emd
