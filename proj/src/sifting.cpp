#include "emd/sifting.hpp"

#include <cmath>

#include "emd/errors.hpp"

namespace emd {

namespace {

int lagrange_degree(InterpKind kind) {
  switch (kind) {
    case InterpKind::Lagrange1: return 1;
    case InterpKind::Lagrange2: return 2;
    case InterpKind::Lagrange3: return 3;
    default: return 0;
  }
}

Interpolant fit_envelope(const std::vector<TimedValue>& points, const TimeGrid& grid,
                         const SiftConfig& cfg, SiftCounters* counters) {
  if (points.size() < 2)
    throw InsufficientExtrema("sifting: too few knots to fit an envelope");
  const Knots extended = mirror_extend(Knots(points), grid.t_start, grid.t_end());
  if (counters) ++counters->interpolant_fits;
  if (cfg.interp == InterpKind::Spline) return fit_spline(extended);
  // Knot counts here are arbitrary, so allow a shorter lower-degree tail group.
  return fit_lagrange_piecewise(extended, lagrange_degree(cfg.interp), /*allow_tail=*/true);
}

Eigen::ArrayXd classical_mean(const SampledSignal& s, const ExtremaSet& extrema,
                              const SiftConfig& cfg, SiftCounters* counters) {
  if (extrema.maxima.size() < 2 || extrema.minima.size() < 2)
    throw InsufficientExtrema("sifting: need at least 2 maxima and 2 minima");
  const Interpolant upper = fit_envelope(extrema.maxima, s.grid, cfg, counters);
  const Interpolant lower = fit_envelope(extrema.minima, s.grid, cfg, counters);
  const Eigen::ArrayXd times = s.grid.times();
  return 0.5 * (upper(times) + lower(times));
}

Eigen::ArrayXd midpoint_curve(const SampledSignal& s, const ExtremaSet& extrema,
                              const SiftConfig& cfg, SiftCounters* counters) {
  if (extrema.maxima.size() < 2 || extrema.minima.size() < 2)
    throw InsufficientExtrema("sifting: need at least 2 maxima and 2 minima");
  const MidpointSet midpoints = compute_midpoints(s, extrema);
  const Interpolant curve = fit_envelope(midpoints.points, s.grid, cfg, counters);
  return curve(s.grid.times());
}

// Parabolic sub-sample refinement of extremum times and values.
void refine_extrema(const SampledSignal& s, ExtremaSet& e) {
  const TimeGrid& g = s.grid;
  auto refine = [&](TimedValue& p) {
    const auto k = static_cast<Eigen::Index>(std::llround((p.t - g.t_start) / g.dt));
    if (k <= 0 || k >= g.n - 1) return;
    const double vl = s.values[k - 1], vc = s.values[k], vr = s.values[k + 1];
    const double denom = vl - 2.0 * vc + vr;
    if (denom == 0.0) return;
    double delta = 0.5 * (vl - vr) / denom;
    if (delta < -0.5 || delta > 0.5) return;
    p.t = g.t(k) + delta * g.dt;
    p.v = vc - 0.25 * (vl - vr) * delta;
  };
  for (TimedValue& p : e.maxima) refine(p);
  for (TimedValue& p : e.minima) refine(p);
}

} // namespace

SampledSignal sifting_function(const SampledSignal& s, const SiftConfig& cfg,
                               SiftCounters* counters) {
  ExtremaSet extrema;
  try {
    extrema = find_extrema(s);
  } catch (const NoExtrema& e) {
    throw InsufficientExtrema(e.what());
  }
  if (cfg.refine_extrema) refine_extrema(s, extrema);

  SampledSignal m;
  m.grid = s.grid;
  switch (cfg.method) {
    case SiftMethod::Classical:
      m.values = classical_mean(s, extrema, cfg, counters);
      break;
    case SiftMethod::Midpoint:
      m.values = midpoint_curve(s, extrema, cfg, counters);
      break;
    case SiftMethod::Hybrid:
      m.values = 0.5 * (classical_mean(s, extrema, cfg, counters) +
                        midpoint_curve(s, extrema, cfg, counters));
      break;
  }
  return m;
}

SampledSignal sift_once(const SampledSignal& s, const SiftConfig& cfg, SiftCounters* counters) {
  const SampledSignal m = sifting_function(s, cfg, counters);
  SampledSignal out;
  out.grid = s.grid;
  out.values = s.values - m.values;
  return out;
}

namespace {

double relative_change(const Eigen::ArrayXd& prev, const Eigen::ArrayXd& next,
                       const TimeGrid& grid, ConvNorm norm) {
  switch (norm) {
    case ConvNorm::L2Rel: {
      SampledSignal diff{grid, next - prev};
      SampledSignal base{grid, prev};
      const double denom = signal_norm(base, Norm::L2);
      return denom > 0.0 ? signal_norm(diff, Norm::L2) / denom : 0.0;
    }
    case ConvNorm::SD: {
      const double denom = prev.square().sum();
      return denom > 0.0 ? (next - prev).square().sum() / denom : 0.0;
    }
  }
  return 0.0;
}

} // namespace

Imf extract_imf(const SampledSignal& s, const SiftConfig& cfg) {
  SiftCounters counters;
  SampledSignal h = s;
  Imf imf;
  for (int iter = 1; iter <= cfg.max_sift_iters; ++iter) {
    SampledSignal next;
    try {
      next = sift_once(h, cfg, &counters);
    } catch (const InsufficientExtrema&) {
      if (iter == 1) throw;
      // Extrema starved mid-iteration: keep the last valid candidate.
      imf.converged = false;
      break;
    }
    const double change = relative_change(h.values, next.values, s.grid, cfg.conv_norm);
    h = std::move(next);
    imf.sift_iterations = iter;
    if (change < cfg.conv_epsilon) {
      imf.converged = true;
      break;
    }
  }
  imf.signal = std::move(h);
  imf.interpolant_fits = counters.interpolant_fits;
  return imf;
}

Decomposition decompose(const SampledSignal& s, const SiftConfig& cfg) {
  Decomposition result;
  result.config = cfg;
  result.residue = s;
  for (int i = 0; i < cfg.max_imfs; ++i) {
    Imf imf;
    try {
      imf = extract_imf(result.residue, cfg);
    } catch (const InsufficientExtrema&) {
      break;
    }
    result.residue.values -= imf.signal.values;
    result.interpolant_fits += imf.interpolant_fits;
    result.imfs.push_back(std::move(imf));
  }
  return result;
}

} // namespace emd
