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

#include "gcca/data_core.hpp"

#include <cmath>
#include <limits>

#include "gcca/error.hpp"
#include "gcca/parallel.hpp"

namespace gcca {

namespace {

constexpr Index kMinSubjects = 4;

std::string column_label(const RawMatrix& raw, Index j) {
  const auto idx = static_cast<std::size_t>(j);
  if (idx < raw.column_names.size() && !raw.column_names[idx].empty())
    return raw.column_names[idx];
  return "#" + std::to_string(j);
}

}  // namespace

void validate_raw(const RawMatrix& raw) {
  if (raw.rows() < kMinSubjects)
    throw TooFewRowsError("need at least " + std::to_string(kMinSubjects) +
                          " subjects, got " + std::to_string(raw.rows()));
  if (!raw.values.allFinite())
    throw NonFiniteError("input matrix contains NaN or Inf");
}

StandardizedMatrix standardize(const RawMatrix& raw) {
  validate_raw(raw);

  const Index n = raw.rows();
  const Index p = raw.cols();
  StandardizedMatrix out;
  out.values.resize(n, p);
  out.column_names = raw.column_names;
  out.source = std::make_shared<RawMatrix>(raw);

  for (Index j = 0; j < p; ++j) {
    const auto col = raw.values.col(j);
    const double mean = col.mean();
    Vector centered = col.array() - mean;
    const double norm = centered.norm();
    // Relative zero-variance test: a column of identical values centers to
    // exact zeros, but near-constant columns only reach rounding noise.
    const double scale = col.cwiseAbs().maxCoeff();
    if (norm <= 1e-12 * std::max(1.0, scale))
      throw ConstantColumnError(column_label(raw, j));
    out.values.col(j) = centered / norm;
  }
  return out;
}

Matrix cross_correlation(const StandardizedMatrix& x,
                         const StandardizedMatrix& y, unsigned threads) {
  if (x.rows() != y.rows())
    throw RowCountMismatchError(
        "subject counts differ: X has " + std::to_string(x.rows()) +
        " rows, Y has " + std::to_string(y.rows()));

  const Index p = x.cols();
  const Index q = y.cols();
  Matrix r(p, q);

  // Fixed tile width keeps the per-entry reduction order independent of the
  // thread count.
  constexpr Index kTile = 256;
  const std::size_t tiles = static_cast<std::size_t>((q + kTile - 1) / kTile);
  parallel_for(tiles, threads, [&](std::size_t t) {
    const Index j0 = static_cast<Index>(t) * kTile;
    const Index w = std::min(kTile, q - j0);
    r.middleCols(j0, w).noalias() =
        x.values.transpose() * y.values.middleCols(j0, w);
  });
  return r;
}

CorrelationGraph truncate(const Matrix& r, double epsilon,
                          std::vector<std::string> row_names,
                          std::vector<std::string> col_names) {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw EpsilonOutOfRangeError(epsilon);

  CorrelationGraph g;
  g.r = r;
  g.epsilon = epsilon;
  g.row_names = std::move(row_names);
  g.col_names = std::move(col_names);

  const Index p = r.rows();
  const Index q = r.cols();
  g.r_trunc.resize(p, q);
  g.row_entries.assign(static_cast<std::size_t>(p), {});
  g.col_entries.assign(static_cast<std::size_t>(q), {});

  for (Index j = 0; j < q; ++j) {
    auto& col = g.col_entries[static_cast<std::size_t>(j)];
    for (Index i = 0; i < p; ++i) {
      const double a = std::abs(r(i, j));
      if (a > epsilon) {  // strict: |r| == epsilon is cut
        g.r_trunc(i, j) = a;
        g.row_entries[static_cast<std::size_t>(i)].emplace_back(j, a);
        col.emplace_back(i, a);
        ++g.nnz;
      } else {
        g.r_trunc(i, j) = 0.0;
      }
    }
  }
  return g;
}

}  // namespace gcca
