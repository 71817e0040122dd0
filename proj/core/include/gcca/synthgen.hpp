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
#include <utility>

#include "gcca/types.hpp"

namespace gcca {

// One synthetic-study configuration: Gaussian data with a single planted
// cross-correlation block of size block_rows x block_cols whose entries lie
// in [rho_lo, rho_hi].
struct SimConfig {
  Index n = 0;
  Index p = 0;
  Index q = 0;
  Index block_rows = 0;
  Index block_cols = 0;
  double rho_lo = 0.0;
  double rho_hi = 0.0;
  std::uint64_t seed = 0;
  int replicates = 0;

  void validate() const;
};

// Ground truth of the planted design.
//
// Construction: a single shared latent factor. Planted variables load on a
// standard normal Z with loadings alpha_i = sqrt of a uniform draw from
// [rho_lo, rho_hi] (same for beta_j on the Y side), plus independent noise
// scaled so every variance is exactly 1:
//   X_i = alpha_i Z + sqrt(1 - alpha_i^2) e_i   (i in i_x; X_i = e_i outside)
// This yields Corr(X_i, Y_j) = alpha_i beta_j in [rho_lo, rho_hi] on the
// block and exactly 0 elsewhere, and the implied joint covariance is
// positive semidefinite by construction. Note that a unit-diagonal
// covariance with an arbitrary dense block of such correlations and
// identity within-set covariances is NOT necessarily PSD, so a construction
// of this kind is required; the price is within-set correlations
// alpha_i * alpha_j among the planted X variables (and likewise for Y).
//
// rho_c_pop is the population value of the estimated canonical correlation:
// take the leading singular pair (a, b) of Sigma_{X0 Y0} = alpha beta^T and
// normalize by the population quadratic forms a^T Sigma_{X0 X0} a and
// b^T Sigma_{Y0 Y0} b.
struct PlantedTruth {
  Index p = 0;
  Index q = 0;
  IndexSet i_x;
  IndexSet i_y;
  Vector alpha;            // loadings over i_x, in i_x order
  Vector beta;             // loadings over i_y, in i_y order
  Matrix sigma_xy_block;   // alpha * beta^T
  double rho_c_pop = 0.0;
};

PlantedTruth build_truth(const SimConfig& config);

// Draws one replicate. The stream is keyed by (seed, replicate), so any
// subset of replicates can be generated in any order, on any number of
// threads, with bitwise-identical output.
std::pair<RawMatrix, RawMatrix> sample(const PlantedTruth& truth,
                                       const SimConfig& config, int replicate);

}  // namespace gcca
