#pragma once

#include <cmath>
#include <string>

#include "emd/errors.hpp"

namespace emd {

/// Root of f in [lo, hi] by bisection with a secant step when it stays
/// bracketed. Requires a sign change over the bracket; throws
/// RootBracketFailure otherwise.
template <class F>
double find_root(F&& f, double lo, double hi, double x_tol = 1e-14) {
  double flo = f(lo);
  double fhi = f(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0.0) == (fhi > 0.0))
    throw RootBracketFailure("find_root: no sign change on [" + std::to_string(lo) + ", " +
                             std::to_string(hi) + "]");

  for (int iter = 0; iter < 200 && hi - lo > x_tol * std::max(1.0, std::abs(lo)); ++iter) {
    double mid = lo + (hi - lo) * flo / (flo - fhi); // secant
    const double margin = 0.01 * (hi - lo);
    if (!(mid > lo + margin) || !(mid < hi - margin)) mid = 0.5 * (lo + hi);
    const double fmid = f(mid);
    if (fmid == 0.0) return mid;
    if ((fmid > 0.0) == (flo > 0.0)) {
      lo = mid;
      flo = fmid;
    } else {
      hi = mid;
      fhi = fmid;
    }
  }
  return 0.5 * (lo + hi);
}

} // namespace emd
