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

#include "gcca/oracle.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

#include "gcca/error.hpp"

namespace gcca {

namespace {

IndexSet mask_to_set(std::uint32_t mask) {
  IndexSet s;
  for (Index i = 0; mask != 0; ++i, mask >>= 1)
    if (mask & 1u) s.push_back(i);
  return s;
}

}  // namespace

OracleResult exhaustive_best_biclique(const CorrelationGraph& graph,
                                      double lambda) {
  const Index p = graph.rows();
  const Index q = graph.cols();
  if (p > 12 || q > 12)
    throw InstanceTooLargeError("exhaustive search is limited to 12x12, got " +
                                std::to_string(p) + "x" + std::to_string(q));

  const std::uint32_t u_masks = (1u << p) - 1u;
  const std::uint32_t v_masks = (1u << q) - 1u;

  OracleResult best;
  bool have_best = false;
  double best_area = 0.0;

  std::vector<double> col_sum(static_cast<std::size_t>(q));
  // subset_sum[v] = sum of col_sum over the columns in mask v
  std::vector<double> subset_sum(static_cast<std::size_t>(v_masks) + 1, 0.0);

  for (std::uint32_t u = 1; u <= u_masks; ++u) {
    const int u_size = __builtin_popcount(u);
    for (Index j = 0; j < q; ++j) {
      double s = 0.0;
      for (Index i = 0; i < p; ++i)
        if (u & (1u << i)) s += graph.r_trunc(i, j);
      col_sum[static_cast<std::size_t>(j)] = s;
    }
    for (std::uint32_t v = 1; v <= v_masks; ++v) {
      const std::uint32_t low = v & (v - 1);
      const int bit = __builtin_ctz(v);
      subset_sum[v] = subset_sum[low] + col_sum[static_cast<std::size_t>(bit)];

      const int v_size = __builtin_popcount(v);
      const double area = static_cast<double>(u_size) * v_size;
      const double score = subset_sum[v] / std::pow(area, lambda);
      ++best.enumerated;

      bool take = false;
      if (!have_best || score > best.best_score) {
        take = true;
      } else if (score == best.best_score) {
        if (area < best_area) {
          take = true;
        } else if (area == best_area) {
          const IndexSet cu = mask_to_set(u);
          const IndexSet cv = mask_to_set(v);
          if (cu < best.best_u || (cu == best.best_u && cv < best.best_v))
            take = true;
        }
      }
      if (take) {
        best.best_score = score;
        best_area = area;
        best.best_u = mask_to_set(u);
        best.best_v = mask_to_set(v);
        have_best = true;
      }
    }
  }
  return best;
}

double naive_eq5(const StandardizedMatrix& x, const StandardizedMatrix& y,
                 const IndexSet& i_x, const IndexSet& i_y) {
  if (i_x.empty() || i_y.empty())
    throw EmptyIndexSetError("oracle: empty index set");
  if (i_x.size() > 50 || i_y.size() > 50)
    throw InstanceTooLargeError("oracle eq5 is limited to 50x50 index sets");

  Matrix x0(x.rows(), static_cast<Index>(i_x.size()));
  for (std::size_t k = 0; k < i_x.size(); ++k)
    x0.col(static_cast<Index>(k)) = x.values.col(i_x[k]);
  Matrix y0(y.rows(), static_cast<Index>(i_y.size()));
  for (std::size_t k = 0; k < i_y.size(); ++k)
    y0.col(static_cast<Index>(k)) = y.values.col(i_y[k]);

  const Matrix m = x0.transpose() * y0;

  // Leading right singular vector via the Gram matrix, left one by
  // back-multiplication; a different route than the production SVD.
  Eigen::SelfAdjointEigenSolver<Matrix> eig(m.transpose() * m);
  if (eig.info() != Eigen::Success)
    throw SvdFailureError("oracle: eigen decomposition failed");
  const Index last = eig.eigenvalues().size() - 1;  // ascending order
  const double sigma = std::sqrt(std::max(0.0, eig.eigenvalues()[last]));
  Vector b = eig.eigenvectors().col(last);
  if (sigma <= 0.0) throw ZeroDenominatorError("oracle: zero singular value");
  Vector a = (m * b) / sigma;

  const Vector xa = x0 * a;
  const Vector yb = y0 * b;
  const double qx = xa.squaredNorm();
  const double qy = yb.squaredNorm();
  if (qx <= 1e-14 || qy <= 1e-14)
    throw ZeroDenominatorError("oracle: degenerate projection");
  return std::abs(xa.dot(yb)) / std::sqrt(qx * qy);
}

}  // namespace gcca
