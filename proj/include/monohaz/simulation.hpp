#pragma once

// Monte Carlo harness: coverage studies over (method, n, x0) cells,
// the Kiefer-Wolfowitz distance diagnostic, and uniform-consistency
// sweeps for the smoothed estimators.
//
// Replication r draws its sample with seed base_seed + r, so reports
// are byte-identical regardless of worker count or scheduling; workers
// write into disjoint slots indexed by replication.

#include <cstdint>
#include <exception>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "monohaz/inference.hpp"
#include "monohaz/numeric.hpp"
#include "monohaz/scenario.hpp"

namespace monohaz {

inline const char* method_name(CiMethod m) {
  switch (m) {
    case CiMethod::GrenanderChernoff: return "grenander";
    case CiMethod::SGUndersmooth: return "sg-under";
    case CiMethod::SGBiasEstimate: return "sg-bias";
  }
  return "?";
}

inline const char* target_name(Target t) {
  return t == Target::Hazard ? "hazard" : "density";
}

struct StudySpec {
  ScenarioSpec scenario;  // template; n is overridden by n_grid
  Target target = Target::Hazard;
  std::vector<CiMethod> methods;
  std::vector<double> x0_points;
  std::vector<std::size_t> n_grid;
  std::size_t replications = 1;
  double alpha = 0.05;
  std::uint64_t base_seed = 0;
  double scenario_c = 0.0;  // c_opt constant driving the SG bandwidths
  unsigned workers = 1;

  void validate() const {
    if (replications < 1) throw std::invalid_argument("replications must be >= 1");
    if (methods.empty()) throw std::invalid_argument("no CI methods selected");
    if (x0_points.empty()) throw std::invalid_argument("no x0 points");
    if (n_grid.empty()) throw std::invalid_argument("empty n grid");
    for (double x0 : x0_points) {
      if (!(x0 > 0.0 && x0 < scenario.follow_up_upper())) {
        throw std::invalid_argument("x0 must be interior to the follow-up support");
      }
    }
  }
};

struct CoverageRow {
  CiMethod method = CiMethod::GrenanderChernoff;
  Target target = Target::Hazard;
  std::size_t n = 0;
  double x0 = 0.0;
  double average_length = 0.0;
  double coverage = 0.0;
  std::size_t failures = 0;
  std::size_t replications = 0;
};

struct CoverageReport {
  std::vector<CoverageRow> rows;
  std::vector<std::string> warnings;
};

namespace detail {

struct CellOutcome {
  bool ok = false;
  bool covered = false;
  double length = 0.0;
};

template <typename Work>
inline void parallel_replications(std::size_t replications, unsigned workers,
                                  Work&& work) {
  if (workers <= 1 || replications < 2) {
    for (std::size_t r = 0; r < replications; ++r) work(r);
    return;
  }
  unsigned t = std::min<unsigned>(workers, static_cast<unsigned>(replications));
  std::vector<std::thread> pool;
  pool.reserve(t);
  for (unsigned w = 0; w < t; ++w) {
    pool.emplace_back([&, w] {
      for (std::size_t r = w; r < replications; r += t) work(r);
    });
  }
  for (auto& th : pool) th.join();
}

}  // namespace detail

inline CoverageReport run_study(const StudySpec& spec) {
  spec.validate();
  CoverageReport report;

  std::vector<double> truth(spec.x0_points.size());
  for (std::size_t i = 0; i < spec.x0_points.size(); ++i) {
    truth[i] = spec.target == Target::Hazard
                   ? spec.scenario.hazard(spec.x0_points[i])
                   : spec.scenario.density(spec.x0_points[i]);
  }

  const std::size_t cells = spec.methods.size() * spec.x0_points.size();
  for (std::size_t n : spec.n_grid) {
    std::vector<std::vector<detail::CellOutcome>> outcomes(
        spec.replications, std::vector<detail::CellOutcome>(cells));

    detail::parallel_replications(spec.replications, spec.workers, [&](std::size_t r) {
      ScenarioSpec sc = spec.scenario;
      sc.n = n;
      sc.seed = spec.base_seed + r;
      CensoredSample sample = generate(sc);
      bool fitted = false;
      FittedModel model;
      try {
        model = FittedModel::fit(sample, spec.target);
        fitted = true;
      } catch (const std::exception&) {
        fitted = false;
      }
      std::size_t cell = 0;
      for (CiMethod method : spec.methods) {
        for (std::size_t xi = 0; xi < spec.x0_points.size(); ++xi, ++cell) {
          if (!fitted) continue;
          double x0 = spec.x0_points[xi];
          try {
            ConfidenceInterval ci;
            switch (method) {
              case CiMethod::GrenanderChernoff:
                ci = model.grenander_ci(x0, spec.alpha);
                break;
              case CiMethod::SGUndersmooth:
                ci = model.sg_undersmooth_ci(x0, spec.scenario_c, spec.alpha);
                break;
              case CiMethod::SGBiasEstimate:
                ci = model.sg_bias_ci(x0, spec.scenario_c, spec.alpha);
                break;
            }
            outcomes[r][cell] = {true, ci.lower <= truth[xi] && truth[xi] <= ci.upper,
                                 ci.upper - ci.lower};
          } catch (const std::exception&) {
            outcomes[r][cell] = {false, false, 0.0};
          }
        }
      }
    });

    std::size_t cell = 0;
    for (CiMethod method : spec.methods) {
      for (std::size_t xi = 0; xi < spec.x0_points.size(); ++xi, ++cell) {
        CoverageRow row;
        row.method = method;
        row.target = spec.target;
        row.n = n;
        row.x0 = spec.x0_points[xi];
        row.replications = spec.replications;
        std::size_t successes = 0, covered = 0;
        double total_length = 0.0;
        for (std::size_t r = 0; r < spec.replications; ++r) {
          const auto& o = outcomes[r][cell];
          if (!o.ok) {
            ++row.failures;
            continue;
          }
          ++successes;
          covered += o.covered ? 1 : 0;
          total_length += o.length;
        }
        if (successes > 0) {
          row.coverage = static_cast<double>(covered) / static_cast<double>(successes);
          row.average_length = total_length / static_cast<double>(successes);
        }
        if (row.failures * 20 >= spec.replications) {  // >= 5%
          std::ostringstream w;
          w << method_name(method) << " n=" << n << " x0=" << row.x0 << ": "
            << row.failures << "/" << spec.replications
            << " replications failed";
          report.warnings.push_back(w.str());
        }
        report.rows.push_back(row);
      }
    }
  }
  return report;
}

struct KwRatePoint {
  std::size_t n = 0;
  double median_sup_distance = 0.0;
};

struct KwRateResult {
  std::vector<KwRatePoint> points;
  double fitted_slope = 0.0;  // log-log slope of median distance vs n
};

// Median sup-distance between the cumulative estimator and its convex
// minorant (hazard) or concave majorant (density) on [0, H^{-1}(0.9)].
inline KwRateResult kw_rate_study(const ScenarioSpec& scenario,
                                  const std::vector<std::size_t>& n_grid,
                                  std::size_t replications, Target target,
                                  std::uint64_t base_seed,
                                  unsigned workers = 1) {
  if (n_grid.size() < 3) {
    throw std::invalid_argument("kw_rate_study: need at least 3 grid points");
  }
  for (std::size_t i = 1; i < n_grid.size(); ++i) {
    if (!(n_grid[i] > n_grid[i - 1])) {
      throw std::invalid_argument("kw_rate_study: n grid must increase");
    }
  }
  const double M = quantile(scenario, 0.9);
  KwRateResult result;
  for (std::size_t n : n_grid) {
    std::vector<double> dist(replications, 0.0);
    detail::parallel_replications(replications, workers, [&](std::size_t r) {
      ScenarioSpec sc = scenario;
      sc.n = n;
      sc.seed = base_seed + r;
      CensoredSample sample = generate(sc);
      double end = sample.max_time();
      double hi = std::min(M, end);
      if (target == Target::Hazard) {
        StepFunction cum = nelson_aalen(sample);
        dist[r] = sup_distance(cum, gcm(cum, 0.0, 0.0, end), 0.0, hi);
      } else {
        StepFunction cum = kaplan_meier(sample);
        dist[r] = sup_distance(cum, lcm(cum, 0.0, 0.0, end), 0.0, hi);
      }
    });
    result.points.push_back({n, median(dist)});
  }
  std::vector<double> lx, ly;
  for (const auto& p : result.points) {
    lx.push_back(std::log(static_cast<double>(p.n)));
    ly.push_back(std::log(p.median_sup_distance));
  }
  result.fitted_slope = ols_slope(lx, ly);
  return result;
}

struct SweepPoint {
  std::size_t n = 0;
  double median_sup_error = 0.0;
};

// Median over replications of the sup error of the smoothed estimator
// against the scenario truth, on [epsilon, M - epsilon] for the
// standard kernel (b = c n^{-1/5}) or [0, M] for the boundary-corrected
// one (b = c n^{-1/3}), M = H^{-1}(0.9), 200-point grids.
inline std::vector<SweepPoint> consistency_sweep(
    const ScenarioSpec& scenario, Target target,
    const std::vector<std::size_t>& n_grid, double epsilon, SmoothingMode mode,
    double c, std::size_t replications = 50, std::uint64_t base_seed = 0,
    unsigned workers = 1) {
  if (!(epsilon > 0.0)) throw std::invalid_argument("epsilon must be positive");
  const double M = quantile(scenario, 0.9);
  double lo = mode == SmoothingMode::Standard ? epsilon : 0.0;
  double hi = mode == SmoothingMode::Standard ? M - epsilon : M;
  if (!(hi > lo)) throw std::invalid_argument("epsilon leaves an empty interval");
  const std::size_t grid_points = 200;
  std::vector<double> grid(grid_points), truth(grid_points);
  for (std::size_t i = 0; i < grid_points; ++i) {
    grid[i] = lo + (hi - lo) * static_cast<double>(i) /
                       static_cast<double>(grid_points - 1);
    truth[i] = target == Target::Hazard ? scenario.hazard(grid[i])
                                        : scenario.density(grid[i]);
  }
  std::vector<SweepPoint> out;
  for (std::size_t n : n_grid) {
    double exponent = mode == SmoothingMode::Standard ? -0.2 : -1.0 / 3.0;
    Bandwidth bw(c * std::pow(static_cast<double>(n), exponent));
    std::vector<double> sup_err(replications, 0.0);
    detail::parallel_replications(replications, workers, [&](std::size_t r) {
      ScenarioSpec sc = scenario;
      sc.n = n;
      sc.seed = base_seed + r;
      FittedModel model = FittedModel::fit(generate(sc), target);
      double worst = 0.0;
      for (std::size_t i = 0; i < grid_points; ++i) {
        double est = smooth_estimate(model.estimate, model.kernel, bw, grid[i],
                                     mode, model.support);
        worst = std::max(worst, std::fabs(est - truth[i]));
      }
      sup_err[r] = worst;
    });
    out.push_back({n, median(sup_err)});
  }
  return out;
}

// Median absolute error of the smoothed estimator at a single point,
// with b = c n^{-bandwidth_exponent}; used to compare the standard and
// boundary-corrected kernels near the origin.
inline double median_abs_error_at(const ScenarioSpec& scenario, Target target,
                                  double x, std::size_t n, SmoothingMode mode,
                                  double c, double bandwidth_exponent,
                                  std::size_t replications,
                                  std::uint64_t base_seed,
                                  unsigned workers = 1) {
  double truth =
      target == Target::Hazard ? scenario.hazard(x) : scenario.density(x);
  Bandwidth bw(c * std::pow(static_cast<double>(n), -bandwidth_exponent));
  std::vector<double> err(replications, 0.0);
  detail::parallel_replications(replications, workers, [&](std::size_t r) {
    ScenarioSpec sc = scenario;
    sc.n = n;
    sc.seed = base_seed + r;
    FittedModel model = FittedModel::fit(generate(sc), target);
    double est = smooth_estimate(model.estimate, model.kernel, bw, x, mode,
                                 model.support);
    err[r] = std::fabs(est - truth);
  });
  return median(err);
}

}  // namespace monohaz
