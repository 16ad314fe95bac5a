#pragma once

// Right-continuous piecewise-constant functions. All the cumulative
// estimators (empirical follow-up CDF, Nelson-Aalen, Kaplan-Meier, the
// censoring-distribution estimator) live in this representation.

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

namespace monohaz {

struct StepFunction {
  std::vector<double> knots;   // strictly increasing
  std::vector<double> values;  // value on [knots[i], knots[i+1])
  double value_at_origin = 0.0;

  StepFunction() = default;

  StepFunction(std::vector<double> k, std::vector<double> v, double origin)
      : knots(std::move(k)), values(std::move(v)), value_at_origin(origin) {
    if (knots.size() != values.size()) {
      throw std::invalid_argument("StepFunction: knots/values length mismatch");
    }
    for (std::size_t i = 1; i < knots.size(); ++i) {
      if (!(knots[i] > knots[i - 1])) {
        throw std::invalid_argument("StepFunction: knots must strictly increase");
      }
    }
  }

  // Right-continuous evaluation: value of the last knot <= t.
  double operator()(double t) const {
    auto it = std::upper_bound(knots.begin(), knots.end(), t);
    if (it == knots.begin()) return value_at_origin;
    return values[static_cast<std::size_t>(it - knots.begin()) - 1];
  }

  // Value just before t; differs from operator() only at knots.
  double left_limit(double t) const {
    auto it = std::lower_bound(knots.begin(), knots.end(), t);
    if (it == knots.begin()) return value_at_origin;
    return values[static_cast<std::size_t>(it - knots.begin()) - 1];
  }

  bool empty() const { return knots.empty(); }
};

}  // namespace monohaz
