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

#include <string>
#include <vector>

#include "gcca/evalmetrics.hpp"
#include "gcca/extraction.hpp"
#include "gcca/tuning.hpp"

namespace gcca {

// All emitters are pure and deterministic: the same value serializes to the
// same bytes. JSON numbers use the shortest round-trip representation.

// {lambda, subgraphs: [{u, v, score, block_mean, ...names}], i_x, i_y}
std::string biclique_set_json(const BicliqueSet& bset,
                              const std::vector<std::string>& x_names = {},
                              const std::vector<std::string>& y_names = {});

std::string fit_json(const GccaFit& fit);

// lambda,pi0,pi1,pi,divergence,n_subgraphs,n_i_x,n_i_y; one row per scored
// candidate, grid order.
std::string lambda_scores_csv(const std::vector<KlScore>& scores);

// Reordered correlation submatrix over i_x x i_y, block by block:
// row_name,col_name,r,in_subgraph,block_id.
std::string heatmap_csv(const GccaFit& fit, const Matrix& r);

std::string sim_report_json(const SimReport& report);

// Recovery percentages in the selection-table layout / moment metrics in the
// estimation-table layout.
std::string recovery_table_csv(const std::vector<SimReport>& reports);
std::string estimation_table_csv(const std::vector<SimReport>& reports);

// Human-readable aligned summary of one study.
std::string report_text_table(const SimReport& report);

std::string convergence_json(const ConvergenceResult& result);
std::string convergence_csv(const ConvergenceResult& result);

std::string truth_json(const PlantedTruth& truth);

}  // namespace gcca
