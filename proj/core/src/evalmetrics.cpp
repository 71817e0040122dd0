// Copyright 2026 The gcca Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gcca/evalmetrics.hpp"

#include <algorithm>
#include <cmath>

#include "gcca/error.hpp"
#include "gcca/parallel.hpp"

namespace gcca {

namespace {

// |a intersect b| for sorted sets.
std::size_t intersection_size(const IndexSet& a, const IndexSet& b) {
  std::size_t count = 0;
  auto ia = a.begin();
  auto ib = b.begin();
  while (ia != a.end() && ib != b.end()) {
    if (*ia < *ib)
      ++ia;
    else if (*ib < *ia)
      ++ib;
    else {
      ++count;
      ++ia;
      ++ib;
    }
  }
  return count;
}

}  // namespace

RecoveryScore score_recovery_sets(const PlantedTruth& truth,
                                  const IndexSet& est_i_x,
                                  const IndexSet& est_i_y) {
  const double tp = static_cast<double>(intersection_size(est_i_x, truth.i_x) +
                                        intersection_size(est_i_y, truth.i_y));
  const double truth_size =
      static_cast<double>(truth.i_x.size() + truth.i_y.size());
  const double fn = truth_size - tp;

  const double fp = static_cast<double>(est_i_x.size() + est_i_y.size()) - tp;
  const double null_size =
      static_cast<double>(truth.p - static_cast<Index>(truth.i_x.size()) +
                          truth.q - static_cast<Index>(truth.i_y.size()));
  const double tn = null_size - fp;

  RecoveryScore score;
  score.sensitivity = tp / (tp + fn);
  score.specificity = tn / (tn + fp);
  score.exact_both = score.sensitivity == 1.0 && score.specificity == 1.0;
  return score;
}

RecoveryScore score_recovery(const PlantedTruth& truth, const GccaFit& fit) {
  if (truth.p != fit.p || truth.q != fit.q)
    throw UniverseMismatchError(
        "truth universe (" + std::to_string(truth.p) + ", " +
        std::to_string(truth.q) + ") does not match fit universe (" +
        std::to_string(fit.p) + ", " + std::to_string(fit.q) + ")");
  return score_recovery_sets(truth, fit.i_x, fit.i_y);
}

SimReport run_study(const SimConfig& config, const GccaConfig& gcca) {
  config.validate();
  gcca.validate();

  const PlantedTruth truth = build_truth(config);
  const auto replicates = static_cast<std::size_t>(config.replicates);

  // One slot per replicate; replicates get the threads, each fit runs
  // single-threaded inside.
  std::vector<ReplicateOutcome> outcomes(replicates);
  GccaConfig inner = gcca;
  inner.threads = 1;
  parallel_for(replicates, gcca.resolved_threads(), [&](std::size_t k) {
    auto [x, y] = sample(truth, config, static_cast<int>(k));
    ReplicateOutcome& slot = outcomes[k];
    try {
      const GccaFit f = fit(x, y, inner);
      slot.recovery = score_recovery(truth, f);
      slot.rho_hat = f.rho_hat;
      slot.lambda_star = f.lambda_star;
    } catch (const Error& e) {
      slot.recovery = score_recovery_sets(truth, {}, {});
      slot.error = e.what();
    }
  });

  SimReport report;
  report.config = config;
  report.gcca = gcca;
  report.rho_c_pop = truth.rho_c_pop;
  report.per_replicate = std::move(outcomes);

  double sens_sum = 0.0, spec_sum = 0.0;
  int sens_one = 0, spec_one = 0, both_one = 0;
  std::vector<double> rhos;
  rhos.reserve(replicates);
  for (const auto& o : report.per_replicate) {
    sens_sum += o.recovery.sensitivity;
    spec_sum += o.recovery.specificity;
    if (o.recovery.sensitivity == 1.0) ++sens_one;
    if (o.recovery.specificity == 1.0) ++spec_one;
    if (o.recovery.exact_both) ++both_one;
    if (o.rho_hat)
      rhos.push_back(*o.rho_hat);
    else
      ++report.attrition;
  }
  const double m = static_cast<double>(replicates);
  report.mean_sensitivity = sens_sum / m;
  report.mean_specificity = spec_sum / m;
  report.pct_sensitivity_1 = 100.0 * sens_one / m;
  report.pct_specificity_1 = 100.0 * spec_one / m;
  report.pct_both_1 = 100.0 * both_one / m;

  if (!rhos.empty()) {
    const double k = static_cast<double>(rhos.size());
    double mean = 0.0;
    for (const double r : rhos) mean += r;
    mean /= k;
    double var = 0.0;
    for (const double r : rhos) var += (r - mean) * (r - mean);
    var /= k;  // population variance, so mse = bias^2 + variance exactly
    const double bias = mean - truth.rho_c_pop;
    report.bias_sq = bias * bias;
    report.variance = var;
    report.mse = report.bias_sq + report.variance;
  }
  return report;
}

double least_squares_slope(const std::vector<double>& x,
                           const std::vector<double>& y) {
  if (x.size() != y.size() || x.size() < 2)
    throw ConfigError("slope needs two same-length samples of size >= 2");
  const double n = static_cast<double>(x.size());
  double sx = 0.0, sy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sx += x[i];
    sy += y[i];
  }
  const double mx = sx / n;
  const double my = sy / n;
  double sxx = 0.0, sxy = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
  }
  if (sxx == 0.0) throw ConfigError("slope undefined: x values are constant");
  return sxy / sxx;
}

ConvergenceResult convergence_study(const SimConfig& base,
                                    const std::vector<Index>& n_values,
                                    const GccaConfig& gcca) {
  {
    std::vector<Index> distinct(n_values);
    std::sort(distinct.begin(), distinct.end());
    distinct.erase(std::unique(distinct.begin(), distinct.end()),
                   distinct.end());
    if (distinct.size() < 3)
      throw ConfigError("convergence study needs at least 3 distinct n values");
    if (distinct.front() < 4)
      throw ConfigError("convergence study: every n must be at least 4");
  }

  ConvergenceResult result;
  std::vector<double> log_n;
  std::vector<double> log_rmse;
  for (const Index n : n_values) {
    SimConfig c = base;
    c.n = n;
    ConvergencePoint point;
    point.n = n;
    point.report = run_study(c, gcca);
    point.rmse = std::sqrt(point.report.mse);
    log_n.push_back(std::log(static_cast<double>(n)));
    log_rmse.push_back(std::log(point.rmse));
    result.points.push_back(std::move(point));
  }
  result.slope = least_squares_slope(log_n, log_rmse);
  return result;
}

}  // namespace gcca
