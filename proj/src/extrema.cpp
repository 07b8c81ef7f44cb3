#include "emd/extrema.hpp"

#include <algorithm>
#include <cmath>

#include "emd/errors.hpp"

namespace emd {

ExtremaSet find_extrema(const SampledSignal& s) {
  const Eigen::Index n = s.values.size();
  if (n < 3) throw NoExtrema("find_extrema: need at least 3 samples");

  ExtremaSet out;
  const auto& v = s.values;

  // Walk runs of equal values; a run flanked by a rise and a fall is a
  // maximum at its middle sample (mirror rule for minima).
  Eigen::Index run_start = 0;
  int prev_dir = 0; // direction entering the current run: +1 rise, -1 fall
  for (Eigen::Index k = 1; k < n; ++k) {
    if (v[k] == v[run_start]) continue;
    const int dir = v[k] > v[run_start] ? 1 : -1;
    const Eigen::Index run_end = k - 1;
    if (run_start > 0) { // runs touching the left endpoint are never extrema
      const Eigen::Index mid = (run_start + run_end) / 2;
      if (prev_dir > 0 && dir < 0) out.maxima.push_back({s.grid.t(mid), v[mid]});
      if (prev_dir < 0 && dir > 0) out.minima.push_back({s.grid.t(mid), v[mid]});
    }
    prev_dir = dir;
    run_start = k;
  }

  if (out.maxima.empty() || out.minima.empty())
    throw NoExtrema("find_extrema: signal has no interior max/min pair");
  return out;
}

std::vector<TimedValue> merge_extrema(const ExtremaSet& e) {
  std::vector<TimedValue> merged;
  merged.reserve(e.total());
  std::merge(e.maxima.begin(), e.maxima.end(), e.minima.begin(), e.minima.end(),
             std::back_inserter(merged),
             [](const TimedValue& a, const TimedValue& b) { return a.t < b.t; });
  return merged;
}

double sample_linear(const SampledSignal& s, double t) {
  const TimeGrid& g = s.grid;
  const double pos = (t - g.t_start) / g.dt;
  if (pos < 0.0 || pos > static_cast<double>(g.n - 1))
    throw OutOfDomain("sample_linear: time outside grid span");
  Eigen::Index k = static_cast<Eigen::Index>(std::floor(pos));
  if (k >= g.n - 1) k = g.n - 2;
  const double frac = pos - static_cast<double>(k);
  return s.values[k] * (1.0 - frac) + s.values[k + 1] * frac;
}

MidpointSet compute_midpoints(const SampledSignal& s, const ExtremaSet& e) {
  const std::vector<TimedValue> merged = merge_extrema(e);
  MidpointSet out;
  out.points.reserve(merged.size() > 0 ? merged.size() - 1 : 0);
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    const double t = 0.5 * (merged[i].t + merged[i + 1].t);
    out.points.push_back({t, sample_linear(s, t)});
  }
  return out;
}

} // namespace emd
