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

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gcca/estimation.hpp"
#include "gcca/synthgen.hpp"
#include "gcca/types.hpp"

namespace gcca {

// Variable-selection quality of one fit against the planted truth, pooled
// over both sides:
//   sensitivity = fraction of planted variables recovered,
//   specificity = fraction of non-planted variables left out.
struct RecoveryScore {
  double sensitivity = 0.0;
  double specificity = 0.0;
  bool exact_both = false;  // sensitivity == 1 and specificity == 1
};

RecoveryScore score_recovery(const PlantedTruth& truth, const GccaFit& fit);
// Same, for bare index sets (used by tests and failed-fit bookkeeping).
RecoveryScore score_recovery_sets(const PlantedTruth& truth,
                                  const IndexSet& est_i_x,
                                  const IndexSet& est_i_y);

struct ReplicateOutcome {
  RecoveryScore recovery;
  std::optional<double> rho_hat;
  std::optional<double> lambda_star;
  std::string error;  // nonempty when the fit itself failed
};

// Monte-Carlo aggregate over one configuration. Moments of rho_hat are taken
// against truth's rho_c_pop; variance uses the population formula so that
// mse == bias_sq + variance holds exactly. Replicates whose fit failed count
// as non-recoveries and are excluded from the rho_hat moments; `attrition`
// counts them.
struct SimReport {
  SimConfig config;
  GccaConfig gcca;
  double rho_c_pop = 0.0;

  double pct_sensitivity_1 = 0.0;
  double pct_specificity_1 = 0.0;
  double pct_both_1 = 0.0;
  double mean_sensitivity = 0.0;
  double mean_specificity = 0.0;

  double bias_sq = 0.0;
  double variance = 0.0;
  double mse = 0.0;
  int attrition = 0;

  std::vector<ReplicateOutcome> per_replicate;
};

// sample -> fit -> score for every replicate, in parallel; the aggregate is
// a deterministic ordered reduction, so the report does not depend on the
// thread count.
SimReport run_study(const SimConfig& config, const GccaConfig& gcca);

struct ConvergencePoint {
  Index n = 0;
  double rmse = 0.0;
  SimReport report;
};

struct ConvergenceResult {
  double slope = 0.0;  // of log(rmse) on log(n)
  std::vector<ConvergencePoint> points;
};

// Repeats run_study for each sample size and regresses log(RMSE of rho_hat)
// on log(n). A square-root convergence rate shows up as a slope near -0.5.
ConvergenceResult convergence_study(const SimConfig& base,
                                    const std::vector<Index>& n_values,
                                    const GccaConfig& gcca);

// Least-squares slope of y on x. Exposed for direct testing.
double least_squares_slope(const std::vector<double>& x,
                           const std::vector<double>& y);

}  // namespace gcca
