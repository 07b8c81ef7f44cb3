#pragma once

#include <algorithm>
#include <cmath>
#include <span>
#include <vector>

namespace emd {

namespace detail {

template <class F>
double adaptive_simpson_rec(F& f, double a, double b, double fa, double fm, double fb,
                            double whole, double tol, int depth) {
  const double m = 0.5 * (a + b);
  const double lm = 0.5 * (a + m);
  const double rm = 0.5 * (m + b);
  const double flm = f(lm);
  const double frm = f(rm);
  const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
  const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
  const double delta = left + right - whole;
  if (depth <= 0 || std::abs(delta) <= 15.0 * tol)
    return left + right + delta / 15.0;
  return adaptive_simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
         adaptive_simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

/// Adaptive Simpson quadrature of f over [a, b] to absolute tolerance tol.
/// The interval is pre-split into panels before adapting so oscillatory
/// integrands cannot alias through the first Simpson estimate.
template <class F>
double integrate(F&& f, double a, double b, double tol = 1e-10) {
  if (a == b) return 0.0;
  constexpr int panels = 16;
  double total = 0.0;
  for (int p = 0; p < panels; ++p) {
    const double lo = p == 0 ? a : a + (b - a) * p / panels;
    const double hi = p == panels - 1 ? b : a + (b - a) * (p + 1) / panels;
    const double m = 0.5 * (lo + hi);
    const double fa = f(lo), fm = f(m), fb = f(hi);
    const double whole = (hi - lo) / 6.0 * (fa + 4.0 * fm + fb);
    total += detail::adaptive_simpson_rec(f, lo, hi, fa, fm, fb, whole, tol / panels, 44);
  }
  return total;
}

/// Same, but splits [a, b] at the given interior breakpoints first. Pass the
/// interpolant's segment boundaries so the integrand stays smooth per panel.
template <class F>
double integrate(F&& f, double a, double b, std::span<const double> breakpoints,
                 double tol = 1e-10) {
  std::vector<double> cuts;
  cuts.push_back(a);
  for (double c : breakpoints)
    if (c > a && c < b) cuts.push_back(c);
  cuts.push_back(b);
  std::sort(cuts.begin(), cuts.end());

  const std::size_t pieces = cuts.size() - 1;
  double total = 0.0;
  for (std::size_t i = 0; i < pieces; ++i)
    total += integrate(f, cuts[i], cuts[i + 1], tol / static_cast<double>(pieces));
  return total;
}

} // namespace emd
