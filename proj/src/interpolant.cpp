#include "emd/interpolant.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "emd/errors.hpp"

namespace emd {

namespace {

void check_strictly_increasing(const Eigen::ArrayXd& t) {
  for (Eigen::Index i = 0; i + 1 < t.size(); ++i) {
    if (t[i + 1] == t[i])
      throw DuplicateKnot("knot times coincide at t = " + std::to_string(t[i]));
    if (t[i + 1] < t[i])
      throw Error("knot times must be strictly increasing");
  }
}

const Segment& segment_at(const Interpolant& interp, double t) {
  if (interp.segments.empty()) throw Error("interpolant has no segments");
  if (t < interp.t_min() || t > interp.t_max())
    throw OutOfDomain("evaluation at t = " + std::to_string(t) + " outside [" +
                      std::to_string(interp.t_min()) + ", " + std::to_string(interp.t_max()) + "]");
  auto it = std::upper_bound(interp.segments.begin(), interp.segments.end(), t,
                             [](double x, const Segment& seg) { return x < seg.t_lo; });
  if (it != interp.segments.begin()) --it;
  return *it;
}

double eval_segment(const Segment& s, double t) {
  const double x = t - s.t_lo;
  return s.c[0] + x * (s.c[1] + x * (s.c[2] + x * s.c[3]));
}

// Expands the Newton-form interpolant through count <= 4 points into
// monomial coefficients about x = t - origin.
std::array<double, 4> newton_to_monomial(const double* nodes, const double* values,
                                         int count, double origin) {
  std::array<double, 4> dd{};
  std::array<double, 4> s{};
  for (int i = 0; i < count; ++i) {
    dd[i] = values[i];
    s[i] = nodes[i] - origin;
  }
  for (int level = 1; level < count; ++level)
    for (int i = count - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (s[i] - s[i - level]);

  // Horner expansion: poly <- poly * (x - s[k]) + dd[k].
  std::array<double, 4> poly{};
  poly[0] = dd[count - 1];
  for (int k = count - 2; k >= 0; --k) {
    std::array<double, 4> next{};
    for (int j = 0; j < 3; ++j) next[j + 1] += poly[j];
    for (int j = 0; j < 4; ++j) next[j] -= s[k] * poly[j];
    next[0] += dd[k];
    poly = next;
  }
  return poly;
}

} // namespace

Knots::Knots(Eigen::ArrayXd times, Eigen::ArrayXd values)
    : t(std::move(times)), v(std::move(values)) {
  if (t.size() != v.size()) throw Error("Knots: time/value size mismatch");
  if (t.size() < 2) throw Error("Knots: need at least 2 points");
  check_strictly_increasing(t);
}

Knots::Knots(const std::vector<TimedValue>& points) {
  if (points.size() < 2) throw Error("Knots: need at least 2 points");
  t.resize(static_cast<Eigen::Index>(points.size()));
  v.resize(static_cast<Eigen::Index>(points.size()));
  for (std::size_t i = 0; i < points.size(); ++i) {
    t[static_cast<Eigen::Index>(i)] = points[i].t;
    v[static_cast<Eigen::Index>(i)] = points[i].v;
  }
  check_strictly_increasing(t);
}

double Interpolant::operator()(double t) const {
  return eval_segment(segment_at(*this, t), t);
}

Eigen::ArrayXd Interpolant::operator()(const Eigen::ArrayXd& t) const {
  Eigen::ArrayXd out(t.size());
  for (Eigen::Index i = 0; i < t.size(); ++i) out[i] = (*this)(t[i]);
  return out;
}

double Interpolant::second_derivative(double t) const {
  const Segment& s = segment_at(*this, t);
  const double x = t - s.t_lo;
  return 2.0 * s.c[2] + 6.0 * s.c[3] * x;
}

std::vector<double> Interpolant::breakpoints() const {
  std::vector<double> out;
  out.reserve(segments.size() + 1);
  for (const Segment& s : segments) out.push_back(s.t_lo);
  out.push_back(segments.back().t_hi);
  return out;
}

namespace {

// Second derivatives for the not-a-knot spline: interior continuity rows
// plus third-derivative continuity across the first and last interior knot.
Eigen::ArrayXd not_a_knot_second_derivatives(const Eigen::ArrayXd& t, const Eigen::ArrayXd& v) {
  const Eigen::Index m = t.size();
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(m, m);
  Eigen::VectorXd rhs = Eigen::VectorXd::Zero(m);
  for (Eigen::Index i = 1; i + 1 < m; ++i) {
    const double h_prev = t[i] - t[i - 1];
    const double h_next = t[i + 1] - t[i];
    a(i, i - 1) = h_prev / 6.0;
    a(i, i) = (h_prev + h_next) / 3.0;
    a(i, i + 1) = h_next / 6.0;
    rhs[i] = (v[i + 1] - v[i]) / h_next - (v[i] - v[i - 1]) / h_prev;
  }
  const double h0 = t[1] - t[0], h1 = t[2] - t[1];
  a(0, 0) = -h1;
  a(0, 1) = h0 + h1;
  a(0, 2) = -h0;
  const double hl = t[m - 1] - t[m - 2], hp = t[m - 2] - t[m - 3];
  a(m - 1, m - 3) = -hl;
  a(m - 1, m - 2) = hl + hp;
  a(m - 1, m - 1) = -hp;
  return a.partialPivLu().solve(rhs).array();
}

} // namespace

Interpolant fit_spline(const Knots& knots, SplineBoundary boundary) {
  const Eigen::Index m = knots.size();
  const Eigen::ArrayXd& t = knots.t;
  const Eigen::ArrayXd& v = knots.v;

  // Second derivatives at the knots.
  Eigen::ArrayXd m2 = Eigen::ArrayXd::Zero(m);
  if (boundary == SplineBoundary::NotAKnot && m == 3) {
    // Degenerates to the single parabola through the three points.
    const double h0 = t[1] - t[0], h1 = t[2] - t[1];
    const double curv = 2.0 * ((v[2] - v[1]) / h1 - (v[1] - v[0]) / h0) / (h0 + h1);
    m2.setConstant(curv);
  } else if (boundary == SplineBoundary::NotAKnot && m > 3) {
    m2 = not_a_knot_second_derivatives(t, v);
  } else if (m > 2) {
    // Natural conditions pin both end second derivatives to 0.
    const Eigen::Index interior = m - 2;
    Eigen::ArrayXd diag(interior), lower(interior), upper(interior), rhs(interior);
    for (Eigen::Index i = 1; i <= interior; ++i) {
      const double h_prev = t[i] - t[i - 1];
      const double h_next = t[i + 1] - t[i];
      lower[i - 1] = h_prev / 6.0;
      diag[i - 1] = (h_prev + h_next) / 3.0;
      upper[i - 1] = h_next / 6.0;
      rhs[i - 1] = (v[i + 1] - v[i]) / h_next - (v[i] - v[i - 1]) / h_prev;
    }
    // Thomas solve; the system is strictly diagonally dominant.
    for (Eigen::Index i = 1; i < interior; ++i) {
      const double w = lower[i] / diag[i - 1];
      diag[i] -= w * upper[i - 1];
      rhs[i] -= w * rhs[i - 1];
    }
    m2[interior] = rhs[interior - 1] / diag[interior - 1];
    for (Eigen::Index i = interior - 1; i >= 1; --i)
      m2[i] = (rhs[i - 1] - upper[i - 1] * m2[i + 1]) / diag[i - 1];
  }

  Interpolant out;
  out.kind = InterpolantKind::CubicSpline;
  out.degree = 3;
  out.knots = knots;
  out.segments.reserve(static_cast<std::size_t>(m - 1));
  for (Eigen::Index i = 0; i + 1 < m; ++i) {
    const double h = t[i + 1] - t[i];
    Segment seg;
    seg.t_lo = t[i];
    seg.t_hi = t[i + 1];
    seg.c[0] = v[i];
    seg.c[1] = (v[i + 1] - v[i]) / h - h * (2.0 * m2[i] + m2[i + 1]) / 6.0;
    seg.c[2] = m2[i] / 2.0;
    seg.c[3] = (m2[i + 1] - m2[i]) / (6.0 * h);
    out.segments.push_back(seg);
  }
  return out;
}

Interpolant fit_lagrange_piecewise(const Knots& knots, int degree, bool allow_tail) {
  if (degree < 1 || degree > 3)
    throw Error("fit_lagrange_piecewise: degree must be 1, 2 or 3");
  const Eigen::Index m = knots.size();
  if (!allow_tail && (m - 1) % degree != 0)
    throw SegmentMismatch("fit_lagrange_piecewise: " + std::to_string(m) +
                          " knots cannot be split into groups of degree " +
                          std::to_string(degree));

  Interpolant out;
  out.kind = InterpolantKind::PiecewiseLagrange;
  out.degree = degree;
  out.knots = knots;
  Eigen::Index start = 0;
  while (start + 1 < m) {
    const int count = static_cast<int>(std::min<Eigen::Index>(degree + 1, m - start));
    Segment seg;
    seg.t_lo = knots.t[start];
    seg.t_hi = knots.t[start + count - 1];
    seg.c = newton_to_monomial(knots.t.data() + start, knots.v.data() + start, count, seg.t_lo);
    out.segments.push_back(seg);
    start += count - 1;
  }
  return out;
}

double eval(const Interpolant& interp, double t) { return interp(t); }

Knots mirror_extend(const Knots& knots, double t_lo, double t_hi) {
  if (!(t_lo < t_hi)) throw Error("mirror_extend: empty target interval");
  const Eigen::Index m = knots.size();

  std::vector<double> head_t, head_v;
  if (knots.t[0] > t_lo) {
    for (Eigen::Index i = 0; i < std::min<Eigen::Index>(2, m); ++i) {
      head_t.push_back(2.0 * t_lo - knots.t[i]);
      head_v.push_back(knots.v[i]);
    }
  }
  std::vector<double> tail_t, tail_v;
  if (knots.t[m - 1] < t_hi) {
    for (Eigen::Index i = m - 1; i >= std::max<Eigen::Index>(0, m - 2); --i) {
      tail_t.push_back(2.0 * t_hi - knots.t[i]);
      tail_v.push_back(knots.v[i]);
    }
  }

  const Eigen::Index total = static_cast<Eigen::Index>(head_t.size() + tail_t.size()) + m;
  Eigen::ArrayXd t(total), v(total);
  Eigen::Index idx = 0;
  // Head reflections come out in decreasing time order; reverse them.
  for (std::size_t i = head_t.size(); i-- > 0;) {
    t[idx] = head_t[i];
    v[idx] = head_v[i];
    ++idx;
  }
  for (Eigen::Index i = 0; i < m; ++i) {
    t[idx] = knots.t[i];
    v[idx] = knots.v[i];
    ++idx;
  }
  for (std::size_t i = 0; i < tail_t.size(); ++i) {
    t[idx] = tail_t[i];
    v[idx] = tail_v[i];
    ++idx;
  }
  return Knots(std::move(t), std::move(v));
}

} // namespace emd
