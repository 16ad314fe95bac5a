#pragma once

// Pointwise confidence intervals at x0.
//
// Grenander intervals use the cube-root limit: the estimator minus the
// truth, scaled by n^{1/3} and the constant |4 g(x0) g'(x0)/survival|^{-1/3},
// converges to the Chernoff distribution; only its 0.975 quantile
// 0.998181 is tabulated, so alpha is fixed at 0.05. The slope of g is
// estimated from the two jump points of the step estimate bracketing
// x0.
//
// Smoothed intervals are normal. The variance plug-in is evaluated at
// the effective constant of the bandwidth actually used for the center
// (c_eff = b n^{1/5}, so the sigma term is the usual (n b)^{-1/2}
// kernel standard error); the bias term of the bias-estimation method
// keeps the scenario constant c_opt. Undersmoothing (b ~ n^{-1/4})
// drops the bias term; bias estimation (b ~ n^{-5/17}) estimates the
// curvature with the wider bandwidth b1 ~ n^{-1/17}.

#include <cmath>
#include <stdexcept>

#include "monohaz/asymptotics.hpp"
#include "monohaz/censored_sample.hpp"
#include "monohaz/estimators.hpp"
#include "monohaz/isotonic.hpp"
#include "monohaz/kernel.hpp"
#include "monohaz/numeric.hpp"
#include "monohaz/smoothing.hpp"

namespace monohaz {

enum class Target { Hazard, Density };
enum class CiMethod { GrenanderChernoff, SGUndersmooth, SGBiasEstimate };

// q(Z, 0.975) for the Chernoff distribution Z = argmin W(t) + t^2.
constexpr double kChernoffQuantile975 = 0.998181;

struct ConfidenceInterval {
  double center = 0.0;
  double lower = 0.0;
  double upper = 0.0;
  CiMethod method = CiMethod::GrenanderChernoff;
  Target target = Target::Hazard;
  double x0 = 0.0;
  double alpha = 0.05;
  double bandwidth = 0.0;       // smoothing bandwidth (SG methods)
  double bias_bandwidth = 0.0;  // curvature bandwidth (bias estimation)
};

// The estimator pipeline for one sample and one target, shared by all
// interval methods so a simulation replication fits it once.
struct FittedModel {
  Target target = Target::Hazard;
  std::size_t n = 0;
  MonotoneEstimate estimate;            // Grenander-type slope process
  StepFunction distribution_estimator;  // H_n (hazard) or G_n (density)
  KernelSpec kernel;
  Support support{0.0, 0.0};

  static FittedModel fit(const CensoredSample& sample, Target target) {
    FittedModel m;
    m.target = target;
    m.n = sample.size();
    m.kernel = triweight();
    double end = sample.max_time();
    if (target == Target::Hazard) {
      m.estimate =
          left_slopes(gcm(nelson_aalen(sample), 0.0, 0.0, end), Direction::Increasing);
      m.distribution_estimator = empirical_h(sample);
    } else {
      m.estimate =
          left_slopes(lcm(kaplan_meier(sample), 0.0, 0.0, end), Direction::Decreasing);
      m.distribution_estimator = censoring_mp(sample);
    }
    m.support = support_of(m.estimate);
    return m;
  }

  double survival_at(double x) const {
    double s = 1.0 - distribution_estimator(x);
    if (!(s > 0.0)) throw std::domain_error("survival estimate zero");
    return s;
  }

  // Difference quotient of the step estimate across the two jump
  // points bracketing x0.
  double slope_derivative_at(double x0) const {
    std::size_t i = estimate.segment_index(x0);
    if (i == 0) throw std::domain_error("derivative undefined");
    double dt = estimate.breakpoints[i + 1] - estimate.breakpoints[i];
    return (estimate.slopes[i] - estimate.slopes[i - 1]) / dt;
  }

  ConfidenceInterval grenander_ci(double x0, double alpha = 0.05) const {
    if (std::fabs(alpha - 0.05) > 1e-12) {
      throw std::invalid_argument(
          "grenander_ci: only alpha = 0.05 is supported (single tabulated "
          "Chernoff quantile)");
    }
    double center = estimate(x0);
    double deriv = slope_derivative_at(x0);
    double surv = survival_at(x0);
    double c_hat = std::cbrt(std::fabs(4.0 * center * deriv / surv));
    double half = std::pow(static_cast<double>(n), -1.0 / 3.0) * c_hat *
                  kChernoffQuantile975;
    return {center,
            center - half,
            center + half,
            CiMethod::GrenanderChernoff,
            target,
            x0,
            alpha,
            0.0,
            0.0};
  }

  ConfidenceInterval sg_undersmooth_ci(double x0, double scenario_c,
                                       double alpha = 0.05) const {
    double b = scenario_c * std::pow(static_cast<double>(n), -0.25);
    double center = smooth_estimate(estimate, kernel, Bandwidth(b), x0,
                                    SmoothingMode::Standard, support);
    double sigma = std::sqrt(sigma2_at(center, x0, b));
    double z = normal_quantile(1.0 - alpha / 2.0);
    double half = std::pow(static_cast<double>(n), -0.4) * sigma * z;
    return {center,
            center - half,
            center + half,
            CiMethod::SGUndersmooth,
            target,
            x0,
            alpha,
            b,
            0.0};
  }

  ConfidenceInterval sg_bias_ci(double x0, double scenario_c,
                                double alpha = 0.05,
                                bool shift_bias = false) const {
    const double nn = static_cast<double>(n);
    double b = scenario_c * std::pow(nn, -5.0 / 17.0);
    double b1 = scenario_c * std::pow(nn, -1.0 / 17.0);
    double center = smooth_estimate(estimate, kernel, Bandwidth(b), x0,
                                    SmoothingMode::Standard, support);
    double dd = smooth_second_derivative(estimate, kernel, Bandwidth(b1), x0,
                                         support);
    double mu_hat = 0.5 * scenario_c * scenario_c * dd * kernel.second_moment;
    double sigma = std::sqrt(sigma2_at(center, x0, b));
    double z = normal_quantile(1.0 - alpha / 2.0);
    double scale = std::pow(nn, -0.4);
    ConfidenceInterval ci;
    ci.method = CiMethod::SGBiasEstimate;
    ci.target = target;
    ci.x0 = x0;
    ci.alpha = alpha;
    ci.bandwidth = b;
    ci.bias_bandwidth = b1;
    if (shift_bias) {
      // Sensitivity variant: recenter by the estimated bias instead of
      // widening symmetrically.
      ci.center = center - scale * mu_hat;
      double half = scale * sigma * z;
      ci.lower = ci.center - half;
      ci.upper = ci.center + half;
    } else {
      ci.center = center;
      double half = std::max(scale * (sigma * z + mu_hat), 0.0);
      ci.lower = center - half;
      ci.upper = center + half;
    }
    return ci;
  }

 private:
  double sigma2_at(double center, double x0, double b) const {
    double c_eff = b * std::pow(static_cast<double>(n), 0.2);
    AsymptoticMoments m = target == Target::Hazard
                              ? hazard_moments(center, 0.0, survival_at(x0),
                                               c_eff, kernel)
                              : density_moments(center, 0.0, survival_at(x0),
                                                c_eff, kernel);
    return m.sigma2;
  }
};

inline ConfidenceInterval grenander_ci(const CensoredSample& sample,
                                       Target target, double x0,
                                       double alpha = 0.05) {
  return FittedModel::fit(sample, target).grenander_ci(x0, alpha);
}

inline ConfidenceInterval sg_ci_undersmooth(const CensoredSample& sample,
                                            Target target, double x0,
                                            double scenario_c,
                                            double alpha = 0.05) {
  return FittedModel::fit(sample, target).sg_undersmooth_ci(x0, scenario_c, alpha);
}

inline ConfidenceInterval sg_ci_bias_estimate(const CensoredSample& sample,
                                              Target target, double x0,
                                              double scenario_c,
                                              double alpha = 0.05,
                                              bool shift_bias = false) {
  return FittedModel::fit(sample, target)
      .sg_bias_ci(x0, scenario_c, alpha, shift_bias);
}

}  // namespace monohaz
