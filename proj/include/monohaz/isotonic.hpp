#pragma once

// Greatest convex minorant / least concave majorant of a cumulative
// step estimator and the slope processes derived from them.
//
// The minorant is computed over the cumulative diagram: the anchor,
// the points (t, f(t)) at the knots of f, and the right endpoint
// (end, f(end)). Near-collinear corners are pooled (relative tolerance
// 1e-12), which leaves the function unchanged but keeps vertex lists
// minimal.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "monohaz/step_function.hpp"

namespace monohaz {

enum class Direction { Increasing, Decreasing };

struct PiecewiseLinear {
  std::vector<double> times;   // strictly increasing vertex times
  std::vector<double> values;  // vertex values; linear in between

  double operator()(double x) const {
    if (times.empty() || x < times.front() || x > times.back()) {
      throw std::domain_error("PiecewiseLinear: query outside domain");
    }
    auto it = std::lower_bound(times.begin(), times.end(), x);
    std::size_t i = static_cast<std::size_t>(it - times.begin());
    if (i < times.size() && times[i] == x) return values[i];
    double t0 = times[i - 1], t1 = times[i];
    double w = (x - t0) / (t1 - t0);
    return values[i - 1] + w * (values[i] - values[i - 1]);
  }

  std::size_t vertex_count() const { return times.size(); }
};

namespace detail {

constexpr double kHullTol = 1e-12;

// cross > 0 means the corner o -> a -> b turns upward (slopes increase).
inline double cross(double ox, double oy, double ax, double ay, double bx,
                    double by) {
  return (ax - ox) * (by - oy) - (ay - oy) * (bx - ox);
}

inline double cross_scale(double ox, double oy, double ax, double ay,
                          double bx, double by) {
  return std::fabs(ax - ox) * std::fabs(by - oy) +
         std::fabs(ay - oy) * std::fabs(bx - ox);
}

// sign = +1: lower hull (convex); sign = -1: upper hull (concave).
inline PiecewiseLinear hull(const StepFunction& f, double anchor_time,
                            double anchor_value, double end, double sign) {
  if (!(end > anchor_time)) {
    throw std::invalid_argument("hull: end must exceed the anchor time");
  }
  std::vector<double> xs{anchor_time}, ys{anchor_value};
  for (std::size_t i = 0; i < f.knots.size(); ++i) {
    if (f.knots[i] > anchor_time && f.knots[i] <= end) {
      xs.push_back(f.knots[i]);
      ys.push_back(f.values[i]);
    }
  }
  if (xs.size() < 2) {
    throw std::invalid_argument("hull: no knots inside the requested range");
  }
  if (xs.back() < end) {
    xs.push_back(end);
    ys.push_back(f(end));
  }

  std::vector<double> hx, hy;
  hx.reserve(xs.size());
  hy.reserve(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) {
    while (hx.size() >= 2) {
      std::size_t m = hx.size();
      double c = sign * cross(hx[m - 2], hy[m - 2], hx[m - 1], hy[m - 1],
                              xs[i], ys[i]);
      double scale = cross_scale(hx[m - 2], hy[m - 2], hx[m - 1], hy[m - 1],
                                 xs[i], ys[i]);
      if (c <= kHullTol * scale) {
        hx.pop_back();
        hy.pop_back();
      } else {
        break;
      }
    }
    hx.push_back(xs[i]);
    hy.push_back(ys[i]);
  }
  return {std::move(hx), std::move(hy)};
}

}  // namespace detail

// Greatest convex minorant of f over [anchor_time, end].
inline PiecewiseLinear gcm(const StepFunction& f, double anchor_time,
                           double anchor_value, double end) {
  return detail::hull(f, anchor_time, anchor_value, end, +1.0);
}

// Least concave majorant; equals -gcm(-f) pointwise.
inline PiecewiseLinear lcm(const StepFunction& f, double anchor_time,
                           double anchor_value, double end) {
  return detail::hull(f, anchor_time, anchor_value, end, -1.0);
}

// Left-hand slope process of a convex minorant or concave majorant:
// the Grenander-type estimator. The value on (breakpoints[i],
// breakpoints[i+1]] is slopes[i]; evaluation is left-continuous.
struct MonotoneEstimate {
  std::vector<double> breakpoints;
  std::vector<double> slopes;
  Direction direction = Direction::Increasing;

  double start() const { return breakpoints.front(); }
  double end() const { return breakpoints.back(); }

  double operator()(double x) const {
    std::size_t i = segment_index(x);
    return slopes[i];
  }

  // Index i with x in (breakpoints[i], breakpoints[i+1]]; x == start
  // maps to the first segment.
  std::size_t segment_index(double x) const {
    if (x < start() || x > end()) {
      throw std::domain_error("MonotoneEstimate: query outside support");
    }
    if (x == start()) return 0;
    auto it = std::lower_bound(breakpoints.begin(), breakpoints.end(), x);
    return static_cast<std::size_t>(it - breakpoints.begin()) - 1;
  }
};

inline MonotoneEstimate left_slopes(const PiecewiseLinear& m,
                                    Direction direction) {
  if (m.times.size() < 2) {
    throw std::invalid_argument("left_slopes: need at least two vertices");
  }
  MonotoneEstimate est;
  est.direction = direction;
  est.breakpoints = m.times;
  est.slopes.resize(m.times.size() - 1);
  for (std::size_t i = 0; i + 1 < m.times.size(); ++i) {
    double dt = m.times[i + 1] - m.times[i];
    if (!(dt > 0.0)) {
      throw std::invalid_argument("left_slopes: duplicate vertex times");
    }
    est.slopes[i] = (m.values[i + 1] - m.values[i]) / dt;
  }
  return est;
}

// sup over [lo, hi] of |f - m|. Both f and m are piecewise with
// finitely many corners, so the supremum is attained at a knot of f or
// at a left limit there; only those candidates are examined.
inline double sup_distance(const StepFunction& f, const PiecewiseLinear& m,
                           double lo, double hi) {
  if (!(hi > lo)) throw std::invalid_argument("sup_distance: empty interval");
  double best = 0.0;
  auto consider = [&](double t) {
    best = std::max(best, std::fabs(f(t) - m(t)));
    best = std::max(best, std::fabs(f.left_limit(t) - m(t)));
  };
  consider(lo);
  for (double t : f.knots) {
    if (t > lo && t < hi) consider(t);
  }
  consider(hi);
  return best;
}

}  // namespace monohaz
