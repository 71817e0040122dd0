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

#include "gcca/types.hpp"

namespace gcca {

// Validates a raw matrix: n >= 4 rows, all entries finite.
// Throws TooFewRowsError / NonFiniteError.
void validate_raw(const RawMatrix& raw);

// Centers every column to mean zero and scales it to unit Euclidean norm.
// With both X and Y standardized this way, X^T Y is the matrix of Pearson
// sample correlations. Scaling to unit *norm* (sum of squares 1) rather than
// unit variance is what makes that product land in [-1, 1].
// Throws ConstantColumnError on a zero-variance column.
StandardizedMatrix standardize(const RawMatrix& raw);

// Pearson cross-correlation matrix R = X^T Y for standardized inputs.
// Tiled over fixed-width column blocks; the tile grid does not depend on
// the thread count, so the result is bitwise identical for any `threads`.
Matrix cross_correlation(const StandardizedMatrix& x,
                         const StandardizedMatrix& y, unsigned threads = 1);

// Builds the correlation graph: keeps |r| where |r| > epsilon, zeroes the
// rest (entries exactly equal to epsilon are zeroed), and assembles the
// compressed adjacency. Optional names are carried through for reporting.
CorrelationGraph truncate(const Matrix& r, double epsilon,
                          std::vector<std::string> row_names = {},
                          std::vector<std::string> col_names = {});

}  // namespace gcca
