#pragma once

#include <array>
#include <vector>

#include <Eigen/Dense>

#include "emd/extrema.hpp"

namespace emd {

/// Interpolation knots, strictly increasing in t.
struct Knots {
  Eigen::ArrayXd t;
  Eigen::ArrayXd v;

  Knots() = default;
  Knots(Eigen::ArrayXd times, Eigen::ArrayXd values);
  explicit Knots(const std::vector<TimedValue>& points);

  Eigen::Index size() const { return t.size(); }
};

enum class SplineBoundary { Natural, NotAKnot };

enum class InterpolantKind { CubicSpline, PiecewiseLagrange };

/// One polynomial piece: value = c0 + c1*x + c2*x^2 + c3*x^3 with x = t - t_lo.
struct Segment {
  double t_lo = 0.0;
  double t_hi = 0.0;
  std::array<double, 4> c{};
};

/// Evaluable piecewise-polynomial curve through a knot set.
struct Interpolant {
  InterpolantKind kind = InterpolantKind::CubicSpline;
  int degree = 3;
  Knots knots;
  std::vector<Segment> segments;

  double t_min() const { return segments.front().t_lo; }
  double t_max() const { return segments.back().t_hi; }

  double operator()(double t) const;
  Eigen::ArrayXd operator()(const Eigen::ArrayXd& t) const;

  /// Second derivative at t (same segment lookup as evaluation).
  double second_derivative(double t) const;

  /// Times at which adjacent polynomial pieces meet, useful as quadrature
  /// breakpoints.
  std::vector<double> breakpoints() const;
};

/// Cubic spline through the knots. Natural boundaries (zero second
/// derivative at both ends) by default; NotAKnot makes the outermost two
/// polynomial pieces coincide on each side. Two knots degenerate to the
/// straight line, three under NotAKnot to the single parabola.
Interpolant fit_spline(const Knots& knots, SplineBoundary boundary = SplineBoundary::Natural);

/// Piecewise Lagrange interpolation of the given degree over consecutive
/// groups of degree+1 knots sharing their boundary knot. Requires
/// (count - 1) divisible by degree unless allow_tail is set, in which case
/// the final group may be shorter and is fitted at correspondingly lower
/// degree.
Interpolant fit_lagrange_piecewise(const Knots& knots, int degree, bool allow_tail = false);

/// Evaluates the interpolant at t; throws OutOfDomain outside the knot span.
double eval(const Interpolant& interp, double t);

/// Reflects the two knots nearest each end of [t_lo, t_hi] across that end,
/// extending the knot span to cover the whole interval. Standard end-effect
/// mitigation before fitting envelopes.
Knots mirror_extend(const Knots& knots, double t_lo, double t_hi);

} // namespace emd
