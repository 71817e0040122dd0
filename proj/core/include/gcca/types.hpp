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

#include <Eigen/Dense>

#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace gcca {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

// Sorted, duplicate-free list of 0-based variable indices.
using IndexSet = std::vector<Index>;

// Raw data as ingested: one row per subject, one column per variable.
// Rejects NaN/Inf and requires at least 4 subjects.
struct RawMatrix {
  Matrix values;
  std::vector<std::string> column_names;

  Index rows() const { return values.rows(); }
  Index cols() const { return values.cols(); }
};

// Column-wise centered and scaled data: every column has mean 0 and unit
// Euclidean norm, so that transpose products of two such matrices are
// Pearson correlation matrices.
struct StandardizedMatrix {
  Matrix values;
  std::vector<std::string> column_names;
  std::shared_ptr<const RawMatrix> source;  // provenance

  Index rows() const { return values.rows(); }
  Index cols() const { return values.cols(); }
};

// Cross-correlation matrix R between an X set (rows) and a Y set (columns),
// together with its truncated absolute version:
//   r_trunc(i,j) = |r(i,j)| if |r(i,j)| > epsilon, else exactly 0.
// The bipartite adjacency is r_trunc > 0 and is kept in compressed per-row /
// per-column form so the extraction sweep touches only nonzero entries.
struct CorrelationGraph {
  Matrix r;
  Matrix r_trunc;
  double epsilon = 0.0;

  std::vector<std::string> row_names;  // X variable names, may be empty
  std::vector<std::string> col_names;  // Y variable names, may be empty

  using Entry = std::pair<Index, double>;        // (other index, r_trunc value)
  std::vector<std::vector<Entry>> row_entries;   // per X row, ascending j
  std::vector<std::vector<Entry>> col_entries;   // per Y column, ascending i
  Index nnz = 0;                                 // edges in the adjacency

  Index rows() const { return r_trunc.rows(); }
  Index cols() const { return r_trunc.cols(); }
};

// Full index universe [0, n).
inline IndexSet full_index_set(Index n) {
  IndexSet all(static_cast<std::size_t>(n));
  for (Index i = 0; i < n; ++i) all[static_cast<std::size_t>(i)] = i;
  return all;
}

}  // namespace gcca
