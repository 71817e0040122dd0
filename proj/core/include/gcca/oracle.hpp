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

#include <cstdint>

#include "gcca/types.hpp"

namespace gcca {

// Brute-force references used by the property tests and `oracle-check`.
// These deliberately take the slow, obviously-correct route.

struct OracleResult {
  IndexSet best_u;
  IndexSet best_v;
  double best_score = 0.0;
  std::uint64_t enumerated = 0;  // (2^p - 1) * (2^q - 1) candidate pairs
};

// Enumerates every nonempty (u, v) pair and returns the objective maximiser.
// Ties: smaller |u|*|v| first, then lexicographic (u, v).
// Guarded to p <= 12 and q <= 12 (throws InstanceTooLargeError).
OracleResult exhaustive_best_biclique(const CorrelationGraph& graph,
                                      double lambda);

// Recomputes the canonical correlation with an independent decomposition
// (eigensolver on the Gram matrix) and explicit matrix products.
// Guarded to |i_x|, |i_y| <= 50.
double naive_eq5(const StandardizedMatrix& x, const StandardizedMatrix& y,
                 const IndexSet& i_x, const IndexSet& i_y);

}  // namespace gcca
