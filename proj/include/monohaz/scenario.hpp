#pragma once

// Data-generating scenarios: parametric laws with closed-form inverse
// CDFs, independent event/censoring draws, and the truth functions the
// coverage study checks against.

#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "monohaz/censored_sample.hpp"
#include "monohaz/rng.hpp"

namespace monohaz {

enum class LawKind { Weibull, Uniform, TruncatedExponential };

// Weibull(a,b):              a = shape, b = scale
// Uniform(a,b):              a = lower, b = upper
// TruncatedExponential(a,b): a = mean of the untruncated law, b = upper cut
struct Law {
  LawKind kind;
  double a = 0.0;
  double b = 0.0;

  static Law weibull(double shape, double scale) {
    require(shape > 0.0 && scale > 0.0, "Weibull parameters must be positive");
    return {LawKind::Weibull, shape, scale};
  }

  static Law uniform(double lo, double hi) {
    require(lo >= 0.0 && hi > lo, "Uniform requires 0 <= lower < upper");
    return {LawKind::Uniform, lo, hi};
  }

  static Law truncated_exponential(double mean, double upper) {
    require(mean > 0.0 && upper > 0.0,
            "TruncatedExponential parameters must be positive");
    return {LawKind::TruncatedExponential, mean, upper};
  }

  double cdf(double x) const {
    if (x <= 0.0) return 0.0;
    switch (kind) {
      case LawKind::Weibull:
        return 1.0 - std::exp(-std::pow(x / b, a));
      case LawKind::Uniform:
        if (x <= a) return 0.0;
        if (x >= b) return 1.0;
        return (x - a) / (b - a);
      case LawKind::TruncatedExponential:
        if (x >= b) return 1.0;
        return (1.0 - std::exp(-x / a)) / (1.0 - std::exp(-b / a));
    }
    return 0.0;
  }

  double density(double x) const {
    switch (kind) {
      case LawKind::Weibull:
        if (x < 0.0) return 0.0;
        if (x == 0.0) return a < 1.0 ? std::numeric_limits<double>::infinity()
                                     : (a == 1.0 ? 1.0 / b : 0.0);
        return (a / b) * std::pow(x / b, a - 1.0) * std::exp(-std::pow(x / b, a));
      case LawKind::Uniform:
        return (x >= a && x <= b) ? 1.0 / (b - a) : 0.0;
      case LawKind::TruncatedExponential:
        if (x < 0.0 || x > b) return 0.0;
        return std::exp(-x / a) / (a * (1.0 - std::exp(-b / a)));
    }
    return 0.0;
  }

  double density_derivative(double x) const {
    switch (kind) {
      case LawKind::Weibull: {
        if (x <= 0.0) return 0.0;
        double f = density(x);
        return f * ((a - 1.0) / x - (a / b) * std::pow(x / b, a - 1.0));
      }
      case LawKind::Uniform:
        return 0.0;
      case LawKind::TruncatedExponential:
        return -density(x) / a;
    }
    return 0.0;
  }

  double density_second_derivative(double x) const {
    switch (kind) {
      case LawKind::Weibull: {
        if (x <= 0.0) return 0.0;
        double f = density(x);
        double r = (a - 1.0) / x - (a / b) * std::pow(x / b, a - 1.0);
        double rprime = -(a - 1.0) / (x * x) -
                        (a * (a - 1.0) / (b * b)) * std::pow(x / b, a - 2.0);
        return f * (r * r + rprime);
      }
      case LawKind::Uniform:
        return 0.0;
      case LawKind::TruncatedExponential:
        return density(x) / (a * a);
    }
    return 0.0;
  }

  double inverse_cdf(double u) const {
    switch (kind) {
      case LawKind::Weibull:
        return b * std::pow(-std::log1p(-u), 1.0 / a);
      case LawKind::Uniform:
        return a + (b - a) * u;
      case LawKind::TruncatedExponential:
        return -a * std::log1p(-u * (1.0 - std::exp(-b / a)));
    }
    return 0.0;
  }

  double upper_support() const {
    switch (kind) {
      case LawKind::Weibull:
        return std::numeric_limits<double>::infinity();
      case LawKind::Uniform:
      case LawKind::TruncatedExponential:
        return b;
    }
    return 0.0;
  }

 private:
  static void require(bool ok, const char* msg) {
    if (!ok) throw std::invalid_argument(msg);
  }
};

struct ScenarioSpec {
  Law event_law;
  Law censor_law;
  std::size_t n = 0;
  std::uint64_t seed = 0;

  void validate() const {
    if (n < 1) throw std::invalid_argument("sample size must be >= 1");
  }

  // Truth functions of the event law; coverage is always measured
  // against these, never against another estimate.
  double density(double x) const { return event_law.density(x); }
  double density_second_derivative(double x) const {
    return event_law.density_second_derivative(x);
  }
  double hazard(double x) const {
    double s = 1.0 - event_law.cdf(x);
    if (s <= 0.0) throw std::domain_error("hazard undefined: survival is zero");
    return event_law.density(x) / s;
  }
  // lambda'' via lambda = f/S, S' = -f:
  //   lambda'' = (f'' S^2 + 3 f f' S + 2 f^3) / S^3
  double hazard_second_derivative(double x) const {
    double s = 1.0 - event_law.cdf(x);
    if (s <= 0.0) throw std::domain_error("hazard undefined: survival is zero");
    double f = event_law.density(x);
    double fp = event_law.density_derivative(x);
    double fpp = event_law.density_second_derivative(x);
    return (fpp * s * s + 3.0 * f * fp * s + 2.0 * f * f * f) / (s * s * s);
  }

  // Follow-up distribution H(x) = 1 - (1-F(x))(1-G(x)).
  double follow_up_cdf(double x) const {
    return 1.0 - (1.0 - event_law.cdf(x)) * (1.0 - censor_law.cdf(x));
  }
  double follow_up_upper() const {
    return std::min(event_law.upper_support(), censor_law.upper_support());
  }

  double censoring_survival(double x) const { return 1.0 - censor_law.cdf(x); }
  double follow_up_survival(double x) const { return 1.0 - follow_up_cdf(x); }
};

// Draws n independent (X_i, C_i) pairs by inverse CDF and keeps
// (min(X_i,C_i), 1{X_i <= C_i}), sorted. Deterministic given the seed.
inline CensoredSample generate(const ScenarioSpec& spec) {
  spec.validate();
  Xoshiro256pp rng(stream_seed(spec.seed, 0));
  std::vector<CensoredObservation> obs;
  obs.reserve(spec.n);
  for (std::size_t i = 0; i < spec.n; ++i) {
    double x = spec.event_law.inverse_cdf(rng.uniform01());
    double c = spec.censor_law.inverse_cdf(rng.uniform01());
    obs.push_back({std::min(x, c), x <= c});
  }
  return CensoredSample::from_observations(std::move(obs));
}

// H^{-1}(p) by bisection to absolute tolerance 1e-10.
inline double quantile(const ScenarioSpec& spec, double p) {
  if (!(p > 0.0 && p < 1.0)) {
    throw std::invalid_argument("quantile: p must lie in (0,1)");
  }
  double hi = spec.follow_up_upper();
  if (!std::isfinite(hi)) {
    hi = 1.0;
    while (spec.follow_up_cdf(hi) < p) hi *= 2.0;
  }
  double lo = 0.0;
  while (hi - lo > 1e-10) {
    double mid = 0.5 * (lo + hi);
    if (spec.follow_up_cdf(mid) < p) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

// The two scenarios of the simulation study.
inline ScenarioSpec weibull_hazard_scenario(std::size_t n, std::uint64_t seed) {
  return {Law::weibull(3.0, 1.0), Law::uniform(0.0, 1.3), n, seed};
}

inline ScenarioSpec truncexp_density_scenario(std::size_t n,
                                              std::uint64_t seed) {
  return {Law::truncated_exponential(1.0, 5.0),
          Law::truncated_exponential(2.0, 5.0), n, seed};
}

inline ScenarioSpec named_scenario(const std::string& name, std::size_t n,
                                   std::uint64_t seed) {
  if (name == "weibull-hazard") return weibull_hazard_scenario(n, seed);
  if (name == "truncexp-density") return truncexp_density_scenario(n, seed);
  throw std::invalid_argument("unknown scenario: " + name);
}

}  // namespace monohaz
