#pragma once

#include <vector>

#include "emd/signal.hpp"

namespace emd {

struct TimedValue {
  double t = 0.0;
  double v = 0.0;
};

/// Interior local maxima and minima, each list strictly increasing in t.
/// Merged in time order the two kinds strictly alternate.
struct ExtremaSet {
  std::vector<TimedValue> maxima;
  std::vector<TimedValue> minima;

  std::size_t total() const { return maxima.size() + minima.size(); }
};

/// Midpoints (in time) between consecutive extrema, with the signal value
/// there. Count is always total extrema minus one.
struct MidpointSet {
  std::vector<TimedValue> points;
};

/// Locates interior extrema. A sample is a maximum when it exceeds its left
/// neighbour and is not exceeded by its right one; plateaus of equal values
/// collapse to a single extremum at the plateau's middle sample. Endpoints
/// are never extrema. Throws NoExtrema when no max/min pair exists.
ExtremaSet find_extrema(const SampledSignal& s);

/// Merged extrema in increasing time order.
std::vector<TimedValue> merge_extrema(const ExtremaSet& e);

/// Midpoint between each consecutive extrema pair; the value is the signal
/// linearly interpolated between the two samples bracketing the midpoint time.
MidpointSet compute_midpoints(const SampledSignal& s, const ExtremaSet& e);

/// Signal value at an arbitrary in-span time by linear interpolation between
/// the bracketing samples.
double sample_linear(const SampledSignal& s, double t);

} // namespace emd
