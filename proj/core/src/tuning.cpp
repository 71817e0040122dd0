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

#include "gcca/tuning.hpp"

#include <cmath>
#include <optional>
#include <variant>

#include "gcca/error.hpp"
#include "gcca/parallel.hpp"

namespace gcca {

KlScore kl_divergence(const CorrelationGraph& graph, BicliqueSet bset) {
  const double cells =
      static_cast<double>(graph.rows()) * static_cast<double>(graph.cols());
  const double nnz = static_cast<double>(graph.nnz);
  const double pi = nnz / cells;
  if (pi == 0.0 || pi == 1.0)
    throw DegenerateReferenceError(
        "thresholded indicator mean is " + std::to_string(pi) +
        "; divergence undefined");

  // Classify cells by membership in the union of blocks. Blocks are
  // disjoint, so counting per block is exact.
  double inside_cells = 0.0;
  double inside_ones = 0.0;
  for (const auto& b : bset.subgraphs) {
    inside_cells +=
        static_cast<double>(b.u.size()) * static_cast<double>(b.v.size());
    for (const Index i : b.u)
      for (const Index j : b.v)
        if (graph.r_trunc(i, j) > 0.0) inside_ones += 1.0;
  }
  const double outside_cells = cells - inside_cells;
  const double outside_ones = nnz - inside_ones;

  KlScore score;
  score.lambda = bset.lambda;
  score.pi = pi;
  score.pi1 = inside_cells > 0.0 ? inside_ones / inside_cells : 0.0;
  score.pi0 = outside_cells > 0.0 ? outside_ones / outside_cells : 0.0;

  // All cells in a region with the same indicator value share one term, so
  // the cell sum collapses to four count-weighted terms. Zero counts mean
  // 0 * log(0) contributions, which are 0 by convention.
  double total = 0.0;
  auto add = [&](double count, double rate, double num, double den) {
    if (count > 0.0 && rate > 0.0) total += count * rate * std::log(num / den);
  };
  add(inside_ones, score.pi1, score.pi1, pi);
  add(inside_cells - inside_ones, 1.0 - score.pi1, 1.0 - score.pi1, 1.0 - pi);
  add(outside_ones, score.pi0, score.pi0, pi);
  add(outside_cells - outside_ones, 1.0 - score.pi0, 1.0 - score.pi0,
      1.0 - pi);

  score.divergence = total;
  score.biclique_set = std::move(bset);
  return score;
}

LambdaSelection select_lambda(const CorrelationGraph& graph,
                              const std::vector<double>& lambdas,
                              int max_subgraphs, double min_block_mean,
                              unsigned threads) {
  if (lambdas.empty()) throw ConfigError("lambda grid is empty");

  std::vector<std::optional<KlScore>> slots(lambdas.size());
  parallel_for(lambdas.size(), threads, [&](std::size_t k) {
    try {
      BicliqueSet bset =
          extract_all(graph, lambdas[k], max_subgraphs, min_block_mean);
      slots[k] = kl_divergence(graph, std::move(bset));
    } catch (const DegenerateReferenceError&) {
      slots[k] = std::nullopt;  // candidate skipped
    }
  });

  LambdaSelection selection;
  bool found = false;
  for (auto& slot : slots) {
    if (!slot) continue;
    // Equal divergences resolve to the larger lambda, whatever the grid order.
    const bool better =
        !found || slot->divergence > selection.best.divergence ||
        (slot->divergence == selection.best.divergence &&
         slot->lambda > selection.lambda_star);
    if (better) {
      selection.best = *slot;
      selection.lambda_star = slot->lambda;
      found = true;
    }
    selection.all_scores.push_back(std::move(*slot));
  }
  if (!found)
    throw NoValidCandidateError(
        "every lambda candidate had a degenerate indicator reference");
  return selection;
}

}  // namespace gcca
