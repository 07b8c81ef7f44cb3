#include "emd/time_grid.hpp"

#include <cmath>
#include <string>

namespace emd {

TimeGrid make_grid(double t_start, double t_end, double dt) {
  if (!(dt > 0.0) || !std::isfinite(dt))
    throw InvalidStep("make_grid: dt must be positive, got " + std::to_string(dt));
  if (!(t_end > t_start))
    throw InvalidStep("make_grid: t_end must exceed t_start");

  const double steps = (t_end - t_start) / dt;
  const double rounded = std::round(steps);
  if (std::abs(steps - rounded) > 1e-9 * std::max(1.0, std::abs(steps)))
    throw NonIntegerSpan("make_grid: span " + std::to_string(t_end - t_start) +
                         " is not an integer multiple of dt " + std::to_string(dt));

  TimeGrid g;
  g.t_start = t_start;
  g.dt = dt;
  g.n = static_cast<Eigen::Index>(rounded) + 1;
  return g;
}

} // namespace emd
