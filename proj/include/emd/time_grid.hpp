#pragma once

#include <Eigen/Dense>

#include "emd/errors.hpp"

namespace emd {

/// Uniform time grid. Sample times are always computed per index as
/// t_start + k*dt so that long grids do not accumulate rounding drift.
struct TimeGrid {
  double t_start = 0.0;
  double dt = 1.0;
  Eigen::Index n = 0;

  double t(Eigen::Index k) const { return t_start + static_cast<double>(k) * dt; }
  double t_end() const { return t(n - 1); }
  double span() const { return static_cast<double>(n - 1) * dt; }

  Eigen::ArrayXd times() const {
    Eigen::ArrayXd out(n);
    for (Eigen::Index k = 0; k < n; ++k) out[k] = t(k);
    return out;
  }
};

/// Builds the grid covering [t_start, t_end] with uniform step dt.
/// The span must be an integer multiple of dt to within 1e-9 steps.
TimeGrid make_grid(double t_start, double t_end, double dt);

} // namespace emd
