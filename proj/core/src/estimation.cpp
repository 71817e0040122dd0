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

#include "gcca/estimation.hpp"

#include <Eigen/SVD>

#include <cmath>

#include "gcca/data_core.hpp"
#include "gcca/error.hpp"
#include "gcca/parallel.hpp"

namespace gcca {

namespace {

Matrix select_columns(const Matrix& m, const IndexSet& which) {
  Matrix out(m.rows(), static_cast<Index>(which.size()));
  for (std::size_t k = 0; k < which.size(); ++k)
    out.col(static_cast<Index>(k)) = m.col(which[k]);
  return out;
}

void require_in_range(const IndexSet& s, Index bound, const char* which) {
  if (s.empty())
    throw EmptyIndexSetError(std::string(which) + " index set is empty");
  for (const Index i : s)
    if (i < 0 || i >= bound)
      throw UniverseMismatchError(std::string(which) + " index " +
                                  std::to_string(i) + " out of range [0, " +
                                  std::to_string(bound) + ")");
}

}  // namespace

std::vector<double> default_lambda_grid() {
  std::vector<double> grid;
  for (int k = 0; k <= 8; ++k) grid.push_back(0.5 + 0.05 * k);
  return grid;
}

unsigned GccaConfig::resolved_threads() const {
  return threads == 0 ? default_thread_count() : threads;
}

void GccaConfig::validate() const {
  if (!(epsilon > 0.0 && epsilon < 1.0)) throw EpsilonOutOfRangeError(epsilon);
  if (lambda_grid.empty()) throw ConfigError("lambda grid is empty");
  for (const double l : lambda_grid)
    if (!(l >= 0.5 && l <= 1.0))
      throw ConfigError("lambda grid value outside [0.5, 1]: " +
                        std::to_string(l));
  if (max_subgraphs < 1) throw ConfigError("max_subgraphs must be at least 1");
  const double floor = resolved_min_block_mean();
  if (!(floor >= 0.0 && floor < 1.0))
    throw ConfigError("min_block_mean must lie in [0, 1)");
}

std::pair<Vector, Vector> canonical_vectors(const StandardizedMatrix& x,
                                            const StandardizedMatrix& y,
                                            const IndexSet& i_x,
                                            const IndexSet& i_y) {
  require_in_range(i_x, x.cols(), "i_x");
  require_in_range(i_y, y.cols(), "i_y");

  const Matrix m =
      select_columns(x.values, i_x).transpose() * select_columns(y.values, i_y);

  Eigen::BDCSVD<Matrix> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success)
    throw SvdFailureError("SVD did not converge on a " +
                          std::to_string(m.rows()) + "x" +
                          std::to_string(m.cols()) + " submatrix");

  Vector a = svd.matrixU().col(0);
  Vector b = svd.matrixV().col(0);

  // Orient the pair: largest-|entry| of a positive (smallest index on ties),
  // flipping both keeps a^T M b = sigma_1 >= 0.
  Index peak = 0;
  a.cwiseAbs().maxCoeff(&peak);
  if (a[peak] < 0.0) {
    a = -a;
    b = -b;
  }
  return {std::move(a), std::move(b)};
}

double canonical_correlation(const StandardizedMatrix& x,
                             const StandardizedMatrix& y, const IndexSet& i_x,
                             const IndexSet& i_y, const Vector& a_hat,
                             const Vector& b_hat) {
  require_in_range(i_x, x.cols(), "i_x");
  require_in_range(i_y, y.cols(), "i_y");
  if (a_hat.size() != static_cast<Index>(i_x.size()) ||
      b_hat.size() != static_cast<Index>(i_y.size()))
    throw UniverseMismatchError("canonical vector lengths do not match the index sets");

  const Matrix x0 = select_columns(x.values, i_x);
  const Matrix y0 = select_columns(y.values, i_y);

  const Vector xa = x0 * a_hat;
  const Vector yb = y0 * b_hat;
  const double qx = xa.squaredNorm();
  const double qy = yb.squaredNorm();
  if (qx <= 1e-14 || qy <= 1e-14)
    throw ZeroDenominatorError("degenerate projection: quadratic form is ~0");
  return xa.dot(yb) / std::sqrt(qx * qy);
}

GccaFit fit(const RawMatrix& x, const RawMatrix& y, const GccaConfig& config) {
  config.validate();
  if (x.rows() != y.rows())
    throw RowCountMismatchError(
        "subject counts differ: X has " + std::to_string(x.rows()) +
        " rows, Y has " + std::to_string(y.rows()));

  const unsigned threads = config.resolved_threads();
  const StandardizedMatrix xs = standardize(x);
  const StandardizedMatrix ys = standardize(y);
  const Matrix r = cross_correlation(xs, ys, threads);
  const CorrelationGraph graph =
      truncate(r, config.epsilon, xs.column_names, ys.column_names);

  LambdaSelection selection =
      select_lambda(graph, config.lambda_grid, config.max_subgraphs,
                    config.resolved_min_block_mean(), threads);

  if (selection.best.biclique_set.subgraphs.empty())
    throw NoValidCandidateError(
        "no subgraph above the noise floor at any lambda; nothing to fit");

  GccaFit result;
  result.lambda_star = selection.lambda_star;
  result.subgraphs = selection.best.biclique_set;
  result.i_x = result.subgraphs.i_x;
  result.i_y = result.subgraphs.i_y;
  result.p = graph.rows();
  result.q = graph.cols();
  result.x_names = xs.column_names;
  result.y_names = ys.column_names;
  result.diagnostics = std::move(selection.all_scores);

  auto [a_hat, b_hat] = canonical_vectors(xs, ys, result.i_x, result.i_y);
  result.rho_hat =
      canonical_correlation(xs, ys, result.i_x, result.i_y, a_hat, b_hat);
  result.a_hat = std::move(a_hat);
  result.b_hat = std::move(b_hat);

  // Mean signed correlation per (U_c, V_d) block pair.
  const auto& blocks = result.subgraphs.subgraphs;
  const Index c_count = static_cast<Index>(blocks.size());
  result.block_signs.resize(c_count, c_count);
  for (Index c = 0; c < c_count; ++c) {
    for (Index d = 0; d < c_count; ++d) {
      const auto& rows_c = blocks[static_cast<std::size_t>(c)].u;
      const auto& cols_d = blocks[static_cast<std::size_t>(d)].v;
      double sum = 0.0;
      for (const Index i : rows_c)
        for (const Index j : cols_d) sum += graph.r(i, j);
      result.block_signs(c, d) = sum / (static_cast<double>(rows_c.size()) *
                                        static_cast<double>(cols_d.size()));
    }
  }
  return result;
}

}  // namespace gcca
