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

#include <utility>
#include <vector>

#include "gcca/types.hpp"

namespace gcca {

// One extracted biclique: row set u, column set v (sorted original indices),
// the value it contributes to the objective, and the lambda it was scored
// with. block_mean is the average r_trunc over u x v; it drives the noise
// floor in extract_all.
struct Biclique {
  IndexSet u;
  IndexSet v;
  double score = 0.0;
  double lambda = 0.0;
  double block_mean = 0.0;
};

enum class Excluded { row, column };

// One exclusion. `time` is the 1-based state index: the untouched active set
// is state 1, the state after the k-th exclusion is state k+1. `objective`
// is the objective of the active state after the exclusion.
struct ExclusionStep {
  int time = 0;
  Excluded kind = Excluded::row;
  Index excluded = 0;  // original index in the full graph
  double objective = 0.0;
};

// Full record of one greedy sweep, including the initial state's objective.
// argmax_time points at the visited state with the largest objective;
// ties go to the latest time (smallest active set).
struct ExclusionTrajectory {
  double initial_objective = 0.0;
  std::vector<ExclusionStep> steps;
  int argmax_time = 1;
};

// The set of bicliques extracted from one graph at a fixed lambda, with the
// trajectories that produced them. Subgraphs are pairwise disjoint in both
// rows and columns; i_x / i_y are the unions of the row / column sets.
struct BicliqueSet {
  double lambda = 0.0;
  std::vector<Biclique> subgraphs;
  std::vector<ExclusionTrajectory> trajectories;
  IndexSet i_x;
  IndexSet i_y;
};

// Objective value of a single block:
//   sum of r_trunc over u x v, divided by (|u| |v|)^lambda.
// For disjoint blocks the full objective is the sum of their values.
double objective(const CorrelationGraph& graph, const IndexSet& u,
                 const IndexSet& v, double lambda);

// Row means and column means of the active submatrix of r_trunc.
// row_means[k] matches active_rows[k]; col_means[k] matches active_cols[k].
std::pair<Vector, Vector> row_col_means(const CorrelationGraph& graph,
                                        const IndexSet& active_rows,
                                        const IndexSet& active_cols);

// One greedy sweep over the given active sets. At every step the row and
// column with the smallest mean are located (ties within a vector go to the
// smallest original index); the column is excluded only when the smallest
// row mean strictly exceeds the smallest column mean, otherwise the row is
// excluded. The sweep stops when a single row or a single column remains.
// Returns the visited state (including the initial one) with the maximal
// objective; ties prefer the latest state.
std::pair<Biclique, ExclusionTrajectory> extract_one(
    const CorrelationGraph& graph, const IndexSet& active_rows,
    const IndexSet& active_cols, double lambda);

// Repeated extraction on residual active sets. Stops when max_subgraphs is
// reached, the residual rows or columns are exhausted, or the next biclique's
// mean r_trunc is at or below min_block_mean (that candidate is discarded).
BicliqueSet extract_all(const CorrelationGraph& graph, double lambda,
                        int max_subgraphs, double min_block_mean);

}  // namespace gcca
