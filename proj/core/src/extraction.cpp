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

#include "gcca/extraction.hpp"

#include <algorithm>
#include <cmath>

#include "gcca/error.hpp"

namespace gcca {

namespace {

void require_lambda(double lambda) {
  if (!(lambda >= 0.5 && lambda <= 1.0))
    throw ConfigError("lambda must lie in [0.5, 1], got " +
                      std::to_string(lambda));
}

void require_nonempty(const IndexSet& s, const char* which) {
  if (s.empty())
    throw EmptyIndexSetError(std::string(which) + " index set is empty");
}

double block_power(Index nu, Index nv, double lambda) {
  return std::pow(static_cast<double>(nu) * static_cast<double>(nv), lambda);
}

// Compact view of the active sets: ascending original indices plus a
// position lookup, erased in lockstep so scans stay contiguous and the
// first minimum found is automatically the smallest original index.
struct ActiveAxis {
  std::vector<Index> ids;       // ascending original indices
  std::vector<double> sums;     // sums[k] = r_trunc sum of ids[k] over the
                                // other axis' active set
  std::vector<Index> position;  // original index -> slot, -1 if inactive

  void init(const IndexSet& active, Index universe) {
    ids.assign(active.begin(), active.end());
    sums.assign(ids.size(), 0.0);
    position.assign(static_cast<std::size_t>(universe), -1);
    for (std::size_t k = 0; k < ids.size(); ++k)
      position[static_cast<std::size_t>(ids[k])] = static_cast<Index>(k);
  }

  bool active(Index original) const {
    return position[static_cast<std::size_t>(original)] >= 0;
  }

  // Index of the minimal mean (= minimal sum, same divisor); first hit wins,
  // i.e. smallest original index on ties.
  std::size_t argmin_mean(double divisor, double* mean_out) const {
    std::size_t best = 0;
    double best_mean = sums[0] / divisor;
    for (std::size_t k = 1; k < sums.size(); ++k) {
      const double m = sums[k] / divisor;
      if (m < best_mean) {
        best_mean = m;
        best = k;
      }
    }
    *mean_out = best_mean;
    return best;
  }

  void erase(std::size_t slot) {
    position[static_cast<std::size_t>(ids[slot])] = -1;
    ids.erase(ids.begin() + static_cast<std::ptrdiff_t>(slot));
    sums.erase(sums.begin() + static_cast<std::ptrdiff_t>(slot));
    for (std::size_t k = slot; k < ids.size(); ++k)
      position[static_cast<std::size_t>(ids[k])] = static_cast<Index>(k);
  }
};

}  // namespace

double objective(const CorrelationGraph& graph, const IndexSet& u,
                 const IndexSet& v, double lambda) {
  require_nonempty(u, "row");
  require_nonempty(v, "column");
  require_lambda(lambda);

  double sum = 0.0;
  for (const Index i : u)
    for (const Index j : v) sum += graph.r_trunc(i, j);
  return sum / block_power(static_cast<Index>(u.size()),
                           static_cast<Index>(v.size()), lambda);
}

std::pair<Vector, Vector> row_col_means(const CorrelationGraph& graph,
                                        const IndexSet& active_rows,
                                        const IndexSet& active_cols) {
  require_nonempty(active_rows, "row");
  require_nonempty(active_cols, "column");

  Vector row_means(static_cast<Index>(active_rows.size()));
  Vector col_means(static_cast<Index>(active_cols.size()));
  for (std::size_t k = 0; k < active_rows.size(); ++k) {
    double s = 0.0;
    for (const Index j : active_cols) s += graph.r_trunc(active_rows[k], j);
    row_means[static_cast<Index>(k)] =
        s / static_cast<double>(active_cols.size());
  }
  for (std::size_t k = 0; k < active_cols.size(); ++k) {
    double s = 0.0;
    for (const Index i : active_rows) s += graph.r_trunc(i, active_cols[k]);
    col_means[static_cast<Index>(k)] =
        s / static_cast<double>(active_rows.size());
  }
  return {std::move(row_means), std::move(col_means)};
}

std::pair<Biclique, ExclusionTrajectory> extract_one(
    const CorrelationGraph& graph, const IndexSet& active_rows,
    const IndexSet& active_cols, double lambda) {
  require_nonempty(active_rows, "row");
  require_nonempty(active_cols, "column");
  require_lambda(lambda);

  ActiveAxis rows;
  ActiveAxis cols;
  rows.init(active_rows, graph.rows());
  cols.init(active_cols, graph.cols());

  // Initial sums over the adjacency; only nonzero entries contribute.
  double total = 0.0;
  for (std::size_t k = 0; k < rows.ids.size(); ++k) {
    double s = 0.0;
    for (const auto& [j, value] : graph.row_entries[static_cast<std::size_t>(
             rows.ids[k])]) {
      if (cols.active(j)) s += value;
    }
    rows.sums[k] = s;
    total += s;
  }
  for (std::size_t k = 0; k < cols.ids.size(); ++k) {
    double s = 0.0;
    for (const auto& [i, value] : graph.col_entries[static_cast<std::size_t>(
             cols.ids[k])]) {
      if (rows.active(i)) s += value;
    }
    cols.sums[k] = s;
  }

  ExclusionTrajectory trajectory;
  trajectory.initial_objective =
      total / block_power(static_cast<Index>(rows.ids.size()),
                          static_cast<Index>(cols.ids.size()), lambda);
  trajectory.argmax_time = 1;
  double best_objective = trajectory.initial_objective;

  int time = 1;
  while (rows.ids.size() > 1 && cols.ids.size() > 1) {
    double row_min = 0.0;
    double col_min = 0.0;
    const std::size_t row_slot =
        rows.argmin_mean(static_cast<double>(cols.ids.size()), &row_min);
    const std::size_t col_slot =
        cols.argmin_mean(static_cast<double>(rows.ids.size()), &col_min);

    ExclusionStep step;
    if (row_min > col_min) {
      // Drop the weakest column; on equality the row goes instead.
      const Index j = cols.ids[col_slot];
      total -= cols.sums[col_slot];
      for (const auto& [i, value] :
           graph.col_entries[static_cast<std::size_t>(j)]) {
        const Index slot = rows.position[static_cast<std::size_t>(i)];
        if (slot >= 0) rows.sums[static_cast<std::size_t>(slot)] -= value;
      }
      cols.erase(col_slot);
      step.kind = Excluded::column;
      step.excluded = j;
    } else {
      const Index i = rows.ids[row_slot];
      total -= rows.sums[row_slot];
      for (const auto& [j, value] :
           graph.row_entries[static_cast<std::size_t>(i)]) {
        const Index slot = cols.position[static_cast<std::size_t>(j)];
        if (slot >= 0) cols.sums[static_cast<std::size_t>(slot)] -= value;
      }
      rows.erase(row_slot);
      step.kind = Excluded::row;
      step.excluded = i;
    }

    ++time;
    step.time = time;
    step.objective =
        total / block_power(static_cast<Index>(rows.ids.size()),
                            static_cast<Index>(cols.ids.size()), lambda);
    if (step.objective >= best_objective) {  // ties: latest state wins
      best_objective = step.objective;
      trajectory.argmax_time = time;
    }
    trajectory.steps.push_back(step);
  }

  // Replay up to argmax_time to recover the winning active state.
  Biclique best;
  best.lambda = lambda;
  best.score = best_objective;
  {
    std::vector<bool> row_live(static_cast<std::size_t>(graph.rows()), false);
    std::vector<bool> col_live(static_cast<std::size_t>(graph.cols()), false);
    for (const Index i : active_rows) row_live[static_cast<std::size_t>(i)] = true;
    for (const Index j : active_cols) col_live[static_cast<std::size_t>(j)] = true;
    for (const auto& step : trajectory.steps) {
      if (step.time > trajectory.argmax_time) break;
      if (step.kind == Excluded::row)
        row_live[static_cast<std::size_t>(step.excluded)] = false;
      else
        col_live[static_cast<std::size_t>(step.excluded)] = false;
    }
    for (const Index i : active_rows)
      if (row_live[static_cast<std::size_t>(i)]) best.u.push_back(i);
    for (const Index j : active_cols)
      if (col_live[static_cast<std::size_t>(j)]) best.v.push_back(j);
  }

  double block_sum = 0.0;
  for (const Index i : best.u)
    for (const Index j : best.v) block_sum += graph.r_trunc(i, j);
  best.block_mean = block_sum / (static_cast<double>(best.u.size()) *
                                 static_cast<double>(best.v.size()));
  return {std::move(best), std::move(trajectory)};
}

BicliqueSet extract_all(const CorrelationGraph& graph, double lambda,
                        int max_subgraphs, double min_block_mean) {
  require_lambda(lambda);
  if (max_subgraphs < 1)
    throw ConfigError("max_subgraphs must be at least 1");
  if (!(min_block_mean >= 0.0 && min_block_mean < 1.0))
    throw ConfigError("min_block_mean must lie in [0, 1)");

  BicliqueSet out;
  out.lambda = lambda;

  IndexSet residual_rows = full_index_set(graph.rows());
  IndexSet residual_cols = full_index_set(graph.cols());

  for (int c = 0; c < max_subgraphs; ++c) {
    if (residual_rows.empty() || residual_cols.empty()) break;

    auto [biclique, trajectory] =
        extract_one(graph, residual_rows, residual_cols, lambda);
    if (biclique.block_mean <= min_block_mean) break;  // noise floor

    // Remove the accepted block from the residual active sets.
    auto remove = [](IndexSet& from, const IndexSet& taken) {
      IndexSet kept;
      kept.reserve(from.size() - taken.size());
      std::set_difference(from.begin(), from.end(), taken.begin(), taken.end(),
                          std::back_inserter(kept));
      from = std::move(kept);
    };
    remove(residual_rows, biclique.u);
    remove(residual_cols, biclique.v);

    out.i_x.insert(out.i_x.end(), biclique.u.begin(), biclique.u.end());
    out.i_y.insert(out.i_y.end(), biclique.v.begin(), biclique.v.end());
    out.subgraphs.push_back(std::move(biclique));
    out.trajectories.push_back(std::move(trajectory));
  }

  std::sort(out.i_x.begin(), out.i_x.end());
  std::sort(out.i_y.begin(), out.i_y.end());
  return out;
}

}  // namespace gcca
