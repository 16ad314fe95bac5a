#pragma once

// Classical step-function estimators on censored samples.
//
// Risk sets compare follow-up times by value, so tied observations all
// belong to the risk set of their common time; tied events are grouped
// (standard product-limit convention). Where the order of tied
// observations matters (the censoring-distribution estimator), events
// are ranked before censorings.

#include <algorithm>
#include <cstddef>
#include <vector>

#include "monohaz/censored_sample.hpp"
#include "monohaz/step_function.hpp"

namespace monohaz {

namespace detail {

struct TimeGroup {
  double time;
  std::size_t at_risk;  // #{j : T_j >= time}
  std::size_t events;
  std::size_t total;
};

inline std::vector<TimeGroup> group_by_time(const CensoredSample& sample) {
  std::vector<TimeGroup> groups;
  const auto& obs = sample.observations();
  const std::size_t n = obs.size();
  std::size_t i = 0;
  while (i < n) {
    std::size_t j = i;
    std::size_t events = 0;
    while (j < n && obs[j].time == obs[i].time) {
      events += obs[j].event ? 1 : 0;
      ++j;
    }
    groups.push_back({obs[i].time, n - i, events, j - i});
    i = j;
  }
  return groups;
}

}  // namespace detail

// Nelson-Aalen cumulative hazard: jumps of size d/r at event times.
inline StepFunction nelson_aalen(const CensoredSample& sample) {
  std::vector<double> knots, values;
  double cum = 0.0;
  for (const auto& g : detail::group_by_time(sample)) {
    if (g.events == 0) continue;
    cum += static_cast<double>(g.events) / static_cast<double>(g.at_risk);
    knots.push_back(g.time);
    values.push_back(cum);
  }
  return StepFunction(std::move(knots), std::move(values), 0.0);
}

// Kaplan-Meier estimator of the event-time distribution function.
inline StepFunction kaplan_meier(const CensoredSample& sample) {
  std::vector<double> knots, values;
  double surv = 1.0;
  for (const auto& g : detail::group_by_time(sample)) {
    if (g.events == 0) continue;
    surv *= 1.0 - static_cast<double>(g.events) / static_cast<double>(g.at_risk);
    knots.push_back(g.time);
    values.push_back(1.0 - surv);
  }
  return StepFunction(std::move(knots), std::move(values), 0.0);
}

// Empirical distribution function of the follow-up time T.
inline StepFunction empirical_h(const CensoredSample& sample) {
  std::vector<double> knots, values;
  const double n = static_cast<double>(sample.size());
  std::size_t seen = 0;
  for (const auto& g : detail::group_by_time(sample)) {
    seen += g.total;
    knots.push_back(g.time);
    values.push_back(static_cast<double>(seen) / n);
  }
  return StepFunction(std::move(knots), std::move(values), 0.0);
}

// Censoring-distribution estimator
//   G_n(t) = 1 - prod_{i=1}^{k-1} ((n-i+1)/(n-i+2))^{1-Delta_i}
// on [T_(k-1), T_(k)), with the empty product on [0, T_(1)) and the
// full product beyond T_(n). Every factor is < 1 only through the
// shifted denominator n-i+2, so sup_t G_n(t) <= 1 - 1/(n+1) < 1.
inline StepFunction censoring_mp(const CensoredSample& sample) {
  std::vector<CensoredObservation> ranked(sample.observations());
  std::stable_sort(ranked.begin(), ranked.end(),
                   [](const CensoredObservation& a, const CensoredObservation& b) {
                     if (a.time != b.time) return a.time < b.time;
                     return a.event && !b.event;  // events first within ties
                   });
  const std::size_t n = ranked.size();
  std::vector<double> knots, values;
  double prod = 1.0;
  double current = 0.0;  // value on [0, T_(1))
  for (std::size_t i = 1; i <= n; ++i) {
    if (!ranked[i - 1].event) {
      prod *= static_cast<double>(n - i + 1) / static_cast<double>(n - i + 2);
    }
    double value = 1.0 - prod;  // value on [T_(i), T_(i+1)) resp. beyond T_(n)
    if (value != current) {
      if (!knots.empty() && knots.back() == ranked[i - 1].time) {
        values.back() = value;
      } else {
        knots.push_back(ranked[i - 1].time);
        values.push_back(value);
      }
      current = value;
    }
  }
  return StepFunction(std::move(knots), std::move(values), 0.0);
}

}  // namespace monohaz
