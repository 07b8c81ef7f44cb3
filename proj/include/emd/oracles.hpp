#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

#include "emd/signal.hpp"

namespace emd::oracles {

/// Measured power-law behaviour of a scanned quantity: log-log regression
/// slope, r^2, and the coefficient y/x^order at the smallest x.
struct ScalingFit {
  Eigen::ArrayXd x_values;
  Eigen::ArrayXd y_values;
  double log_log_slope = 0.0;
  double leading_coefficient = 0.0;
  double r_squared = 0.0;
};

/// Least-squares fit of log|y| against log x. nominal_order sets the power
/// used for the leading coefficient.
ScalingFit fit_power_law(const Eigen::ArrayXd& x, const Eigen::ArrayXd& y, int nominal_order);

/// One verified constant: computed value against its analytical reference.
/// Reference may be NaN for purely informational entries.
struct ConstantEntry {
  std::string label;
  double computed = 0.0;
  double expected = 0.0;
  double rel_error = 0.0;
};

struct ConstantsReport {
  std::vector<ConstantEntry> entries;

  void add(const std::string& label, double computed, double expected);
  const ConstantEntry* find(const std::string& label) const;
  double value(const std::string& label) const; // throws if missing
};

/// Derivative of the recipe's continuous waveform.
double recipe_derivative(const ToneRecipe& recipe, double t);

/// Exact extremum of the recipe near a seed time, by root-finding the
/// derivative over [seed - halfwidth, seed + halfwidth].
double find_extremum_near(const ToneRecipe& recipe, double seed, double halfwidth);

/// Sub-sample refinement of a sampled extremum location by a parabola
/// through the three samples around it.
double refine_extremum_time(const SampledSignal& s, double t_extremum);

// ---------------------------------------------------------------------------
// Projection-difference scans for the close-frequency interpolant analysis.
// ---------------------------------------------------------------------------

struct ProjectionDifferenceScan {
  int degree = 1;
  double phase = 0.0;
  /// Labelled projection differences, one ScalingFit per pair. Three-tone
  /// scans produce P1-P2, P1-P3, P2-P3; phase scans a single P4-P5.
  std::vector<std::pair<std::string, ScalingFit>> differences;
};

/// Projects the midpoint interpolating function of the test signal onto its
/// component tones and scans the pairwise projection differences over
/// eps_list. phase == 0 selects the three-tone signal cos(w t) +
/// cos((1+a e)w t) + cos((1+b e)w t); otherwise the two-tone signal
/// cos(w t) + cos((1+a e)w t + phase).
ProjectionDifferenceScan projection_difference_scan(double a, double b, double omega,
                                                    int degree,
                                                    std::span<const double> eps_list,
                                                    double phase = 0.0);

/// Companion scan over phase at fixed eps for the two-tone signal.
ProjectionDifferenceScan projection_phase_scan(double a, double omega, int degree,
                                               std::span<const double> phi_list, double eps);

/// Analytical leading coefficient of the three-tone projection difference
/// (per eps^3). which: 0 -> P1-P2, 1 -> P1-P3, 2 -> P2-P3.
double three_tone_difference_reference(int degree, int which, double a, double b, double omega);

/// Analytical leading-order two-tone projection difference at (eps, phi).
double two_tone_difference_reference(int degree, double a, double omega, double eps, double phi);

// ---------------------------------------------------------------------------
// Perturbation-damping analysis: one sift of cos(w t) + eps f(t).
// ---------------------------------------------------------------------------

/// Residual-order scan: one midpoint sift with a linear interpolant applied
/// to cos(w t) + eps f(t) on a fixed time span; the interior L1 norm of the
/// surviving perturbation should scale as (pi/w)^2.
ScalingFit residual_order_scan(const ToneRecipe& f, std::span<const double> omega_list,
                               double eps, double t_span = 6.0);

/// Projections of the once-sifted signal cos(w t) + eps cos(nu t) onto
/// cos/sin(w t), for both classical and midpoint sifting with natural
/// splines through the analytically placed knots (10 maxima, 10 minima,
/// 19 midpoints). At nu == omega also reports the (nu - omega) slopes by
/// central differencing.
ConstantsReport perturbation_constants(double omega, double nu, double eps);

// ---------------------------------------------------------------------------
// Rational two-tone comparison of the classical and midpoint methods.
// ---------------------------------------------------------------------------

/// One exact-extrema sift of (cos(w1 t) + cos(w2 t))/2 per method over one
/// full period, then tone amplitudes of the sifted signals. Requires w2/w1
/// rational (denominator <= 1e6 within 1e-12).
ConstantsReport rational_two_tone_report(double omega1, double omega2);

// ---------------------------------------------------------------------------
// Cubic-Lagrange comparison on the 1:1.5 two-tone signal with perturbation.
// ---------------------------------------------------------------------------

/// One sift of cos(w t) + cos(1.5 w t) + eps cos(nu t) on [0, 5 pi / w],
/// classical via cubic Lagrange through the 4 maxima / 4 minima, midpoint
/// via two cubic segments through the 7 midpoints; projections onto
/// cos/sin(1.5 w t). Also reports the eps-slopes of the projections at nu.
ConstantsReport lagrange_projection_report(double omega, double eps, double nu);

/// Best rational approximation m/n to x with n <= max_den; throws
/// IrrationalRatio if none matches within tol.
std::pair<long, long> reduce_to_fraction(double x, long max_den = 1000000, double tol = 1e-12);

} // namespace emd::oracles
