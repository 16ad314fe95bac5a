#pragma once

// Asymptotic mean, variance, and MSE-optimal bandwidth constants of the
// smoothed estimators. With b = c n^{-1/5}, the n^{2/5}-standardized
// error is Gaussian with
//   mu      = (1/2) c^2 g''(x) int u^2 k(u) du
//   sigma^2 = g(x) int k^2 / (c * survival(x))
// where (g, survival) is (hazard, 1-H) or (density, 1-G). The same
// formulas back the plug-in estimates used by confidence intervals.

#include <cmath>
#include <stdexcept>

#include "monohaz/kernel.hpp"
#include "monohaz/smoothing.hpp"
#include "monohaz/step_function.hpp"

namespace monohaz {

struct AsymptoticMoments {
  double mu = 0.0;
  double sigma2 = 0.0;
  double c = 0.0;  // bandwidth constant the moments were evaluated at
};

namespace detail {

inline AsymptoticMoments moments(double value, double second_derivative,
                                 double survival, double c,
                                 const KernelSpec& k) {
  if (!(survival > 0.0)) {
    throw std::domain_error("survival estimate zero");
  }
  if (!(c > 0.0)) throw std::invalid_argument("bandwidth constant must be > 0");
  AsymptoticMoments m;
  m.mu = 0.5 * c * c * second_derivative * k.second_moment;
  m.sigma2 = value * k.roughness / (c * survival);
  m.c = c;
  return m;
}

inline double c_opt(double value, double second_derivative, double survival,
                    const KernelSpec& k) {
  if (!(survival > 0.0)) throw std::domain_error("survival estimate zero");
  if (second_derivative == 0.0) {
    throw std::domain_error("second derivative is zero: no finite optimum");
  }
  double num = value * k.roughness;
  double den = survival * second_derivative * second_derivative *
               k.second_moment * k.second_moment;
  return std::pow(num, 0.2) * std::pow(den, -0.2);
}

}  // namespace detail

inline AsymptoticMoments hazard_moments(double lambda_x, double lambda_dd_x,
                                        double one_minus_H_x, double c,
                                        const KernelSpec& k) {
  return detail::moments(lambda_x, lambda_dd_x, one_minus_H_x, c, k);
}

inline AsymptoticMoments density_moments(double f_x, double f_dd_x,
                                         double one_minus_G_x, double c,
                                         const KernelSpec& k) {
  return detail::moments(f_x, f_dd_x, one_minus_G_x, c, k);
}

inline double c_opt_hazard(double lambda_x, double lambda_dd_x,
                           double one_minus_H_x, const KernelSpec& k) {
  return detail::c_opt(lambda_x, lambda_dd_x, one_minus_H_x, k);
}

inline double c_opt_density(double f_x, double f_dd_x, double one_minus_G_x,
                            const KernelSpec& k) {
  return detail::c_opt(f_x, f_dd_x, one_minus_G_x, k);
}

// AMSE(c) = (1/4) c^4 g''^2 m2^2 + g R / (c * survival); the closed-form
// c_opt is its argmin, which tests cross-check by grid search.
inline double amse(double value, double second_derivative, double survival,
                   double c, const KernelSpec& k) {
  if (!(survival > 0.0)) throw std::domain_error("survival estimate zero");
  if (!(c > 0.0)) throw std::invalid_argument("bandwidth constant must be > 0");
  double bias2 = 0.25 * std::pow(c, 4) * second_derivative *
                 second_derivative * k.second_moment * k.second_moment;
  return bias2 + value * k.roughness / (c * survival);
}

// Plug-in moments: the smoothed estimate stands in for the true curve,
// its kernel second derivative for the curvature, and a step-function
// survival estimator (1 - H_n, or 1 - G_n for densities) for the
// survival factor.
inline AsymptoticMoments plug_in_moments(const MonotoneEstimate& est,
                                         const KernelSpec& k,
                                         const Support& support,
                                         const StepFunction& distribution_estimator,
                                         double x, double c,
                                         Bandwidth smoothing_bw,
                                         Bandwidth derivative_bw) {
  double value =
      smooth_estimate(est, k, smoothing_bw, x, SmoothingMode::Standard, support);
  double dd = smooth_second_derivative(est, k, derivative_bw, x, support);
  double survival = 1.0 - distribution_estimator(x);
  return detail::moments(value, dd, survival, c, k);
}

}  // namespace monohaz
