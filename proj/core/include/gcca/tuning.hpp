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

#include <vector>

#include "gcca/extraction.hpp"
#include "gcca/types.hpp"

namespace gcca {

// KL-divergence diagnostics for one lambda candidate. The divergence
// compares a two-rate Bernoulli block model of the thresholded-correlation
// indicators D_ij = I(|R_ij| > epsilon) against a single-rate reference:
//   pi  = mean of D over all p*q cells,
//   pi1 = mean of D inside the union of extracted blocks,
//   pi0 = mean of D outside.
// Each cell contributes D*rate*log(rate/pi) + (1-D)*(1-rate)*log((1-rate)/
// (1-pi)) with its block's rate; 0*log(0) terms are 0. Note the per-cell
// rate weights: this is the weighted form, not the plain Bernoulli KL, and
// it is not guaranteed nonnegative.
struct KlScore {
  double lambda = 0.0;
  double pi0 = 0.0;
  double pi1 = 0.0;
  double pi = 0.0;
  double divergence = 0.0;
  BicliqueSet biclique_set;
};

// Scores an extracted set against its graph. Throws DegenerateReferenceError
// when pi is 0 or 1 (no contrast to measure).
KlScore kl_divergence(const CorrelationGraph& graph, BicliqueSet bset);

struct LambdaSelection {
  double lambda_star = 0.0;
  KlScore best;
  std::vector<KlScore> all_scores;  // in grid order
};

// Runs extract_all for every candidate lambda (in parallel; results are
// assembled in grid order) and picks the divergence maximiser. Ties go to
// the larger lambda. Candidates that raise DegenerateReferenceError are
// skipped; if every candidate is skipped, NoValidCandidateError is thrown.
LambdaSelection select_lambda(const CorrelationGraph& graph,
                              const std::vector<double>& lambdas,
                              int max_subgraphs, double min_block_mean,
                              unsigned threads = 1);

}  // namespace gcca
