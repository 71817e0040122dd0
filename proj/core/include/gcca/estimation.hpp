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
#include <vector>

#include "gcca/tuning.hpp"
#include "gcca/types.hpp"

namespace gcca {

std::vector<double> default_lambda_grid();  // 0.5, 0.55, ..., 0.9

// Model parameters for a full fit. min_block_mean defaults to epsilon when
// unset; threads = 0 means all hardware threads.
struct GccaConfig {
  double epsilon = 0.2;
  std::vector<double> lambda_grid = default_lambda_grid();
  int max_subgraphs = 5;
  std::optional<double> min_block_mean;
  unsigned threads = 0;

  double resolved_min_block_mean() const {
    return min_block_mean.value_or(epsilon);
  }
  unsigned resolved_threads() const;
  void validate() const;
};

// Result of a full pipeline run. a_hat / b_hat are unit-norm and aligned
// with the sorted index sets i_x / i_y. Signs are fixed deterministically:
// the largest-magnitude entry of a_hat is positive and b_hat is oriented so
// the correlation numerator is nonnegative, hence rho_hat is in [0, 1].
// block_signs(c, d) is the mean *signed* correlation over U_c x V_d; its
// diagonal describes each block, off-diagonal entries the cross-block
// relationships (positive vs negative coupling).
struct GccaFit {
  double lambda_star = 0.0;
  IndexSet i_x;
  IndexSet i_y;
  Vector a_hat;
  Vector b_hat;
  double rho_hat = 0.0;
  Matrix block_signs;
  std::vector<KlScore> diagnostics;  // one per scored lambda, grid order

  BicliqueSet subgraphs;  // the selected extraction
  Index p = 0;            // X universe size
  Index q = 0;            // Y universe size
  std::vector<std::string> x_names;
  std::vector<std::string> y_names;
};

// Leading singular pair of M = X[:, i_x]^T Y[:, i_y], unit-norm, signs per
// the GccaFit convention. Throws SvdFailureError if the decomposition does
// not converge.
std::pair<Vector, Vector> canonical_vectors(const StandardizedMatrix& x,
                                            const StandardizedMatrix& y,
                                            const IndexSet& i_x,
                                            const IndexSet& i_y);

// Correlation of the projected variables:
//   (a^T X0^T Y0 b) / sqrt((a^T X0^T X0 a)(b^T Y0^T Y0 b)).
// Throws ZeroDenominatorError when either quadratic form is <= 1e-14.
double canonical_correlation(const StandardizedMatrix& x,
                             const StandardizedMatrix& y, const IndexSet& i_x,
                             const IndexSet& i_y, const Vector& a_hat,
                             const Vector& b_hat);

// standardize -> cross-correlation -> truncate -> lambda selection ->
// canonical pair -> block sign summary. Deterministic for a fixed input and
// config, regardless of thread count.
GccaFit fit(const RawMatrix& x, const RawMatrix& y, const GccaConfig& config);

}  // namespace gcca
