#pragma once

// Kernel-smoothed Grenander-type estimators. The slope process is
// piecewise constant, so the convolution integral over each piece
// [a, c] collapses to antiderivative differences:
//   int_a^c k_b(x-u) est(u) du = slope * (K((x-a)/b) - K((x-c)/b)).
// No quadrature is involved; the integration range is the smoothing
// window clipped to the support, matching the (x-b) v 0 and
// (x+b) ^ tau_H limits of the defining integrals.

#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "monohaz/isotonic.hpp"
#include "monohaz/kernel.hpp"

namespace monohaz {

enum class SmoothingMode { Standard, BoundaryCorrected };

struct Support {
  double lower = 0.0;
  double upper = 0.0;
};

inline Support support_of(const MonotoneEstimate& est) {
  return {est.start(), est.end()};
}

struct Bandwidth {
  double b;

  explicit Bandwidth(double value) : b(value) {
    if (!(value > 0.0) || !std::isfinite(value)) {
      throw std::invalid_argument("bandwidth must be positive and finite");
    }
  }
};

namespace detail {

struct Window {
  double lo, hi;
};

inline Window smoothing_window(const MonotoneEstimate& est, double b, double x,
                               const Support& support) {
  if (!(x >= support.lower && x <= support.upper)) {
    throw std::domain_error("smoothing point outside support");
  }
  double lo = std::max({x - b, support.lower, est.start()});
  double hi = std::min({x + b, support.upper, est.end()});
  if (!(lo < hi)) {
    throw std::domain_error("estimate undefined on the smoothing window");
  }
  return {lo, hi};
}

// Accumulate sum of slope * (A(wa) - A(wc)) over the pieces of est
// intersected with [lo, hi], where A is an antiderivative evaluated in
// kernel coordinates w = (x - u)/b.
template <typename Antiderivative>
inline double piecewise_convolve(const MonotoneEstimate& est, double b,
                                 double x, double lo, double hi,
                                 Antiderivative&& A) {
  double total = 0.0;
  const auto& bp = est.breakpoints;
  for (std::size_t i = 0; i + 1 < bp.size(); ++i) {
    double a = std::max(bp[i], lo);
    double c = std::min(bp[i + 1], hi);
    if (!(a < c)) continue;
    total += est.slopes[i] * (A((x - a) / b) - A((x - c) / b));
  }
  return total;
}

}  // namespace detail

// Smoothed Grenander-type estimate at x. Standard mode evaluates the
// plain kernel over the clipped window; BoundaryCorrected substitutes
// the boundary kernel phi k + psi u k within one bandwidth of either
// support endpoint (the two modes coincide in between).
inline double smooth_estimate(const MonotoneEstimate& est, const KernelSpec& k,
                              Bandwidth bw, double x, SmoothingMode mode,
                              const Support& support) {
  const double b = bw.b;
  auto [lo, hi] = detail::smoothing_window(est, b, x, support);

  if (mode == SmoothingMode::Standard ||
      (x > support.lower + b && x < support.upper - b)) {
    return detail::piecewise_convolve(est, b, x, lo, hi, k.antiderivative);
  }

  if (!(support.upper - support.lower >= 2.0 * b)) {
    throw std::invalid_argument(
        "boundary correction requires the bandwidth to be at most half the "
        "support length");
  }
  const bool left = x <= support.lower + b;
  const double s = left ? (x - support.lower) / b : (support.upper - x) / b;
  const BoundaryCoefficients bc = boundary_coefficients(k, s);
  const double psi = left ? bc.psi : -bc.psi;
  double dk = detail::piecewise_convolve(est, b, x, lo, hi, k.antiderivative);
  double dm =
      detail::piecewise_convolve(est, b, x, lo, hi, k.first_moment_integral);
  return bc.phi * dk + psi * dm;
}

inline std::vector<std::pair<double, double>> smooth_curve(
    const MonotoneEstimate& est, const KernelSpec& k, Bandwidth bw,
    const std::vector<double>& grid, SmoothingMode mode,
    const Support& support) {
  std::vector<std::pair<double, double>> out;
  out.reserve(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    try {
      out.emplace_back(grid[i], smooth_estimate(est, k, bw, grid[i], mode, support));
    } catch (const std::exception& e) {
      throw std::domain_error("grid index " + std::to_string(i) + " (x = " +
                              std::to_string(grid[i]) + "): " + e.what());
    }
  }
  return out;
}

// Second derivative of the smoothed estimate,
//   int k_b''(x-u) d(cumulative of est)(u)
//     = (1/b^2) sum_j slope_j [k'((x-a_j)/b) - k'((x-c_j)/b)],
// over the pieces clipped to the smoothing window.
inline double smooth_second_derivative(const MonotoneEstimate& est,
                                       const KernelSpec& k, Bandwidth bw,
                                       double x, const Support& support) {
  if (!k.derivative) {
    throw std::invalid_argument("kernel derivative unavailable");
  }
  const double b = bw.b;
  auto [lo, hi] = detail::smoothing_window(est, b, x, support);
  double sum = detail::piecewise_convolve(est, b, x, lo, hi, k.derivative);
  return sum / (b * b);
}

}  // namespace monohaz
