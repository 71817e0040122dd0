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

#include "gcca/synthgen.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>

#include "gcca/error.hpp"
#include "gcca/rng.hpp"

namespace gcca {

namespace {

// First `count` elements of a partial Fisher-Yates shuffle of [0, universe),
// returned sorted.
IndexSet sample_without_replacement(Rng& rng, Index universe, Index count) {
  std::vector<Index> pool(static_cast<std::size_t>(universe));
  for (Index i = 0; i < universe; ++i) pool[static_cast<std::size_t>(i)] = i;
  for (Index k = 0; k < count; ++k) {
    const auto offset = static_cast<Index>(
        rng.next_below(static_cast<std::uint64_t>(universe - k)));
    std::swap(pool[static_cast<std::size_t>(k)],
              pool[static_cast<std::size_t>(k + offset)]);
  }
  IndexSet chosen(pool.begin(), pool.begin() + count);
  std::sort(chosen.begin(), chosen.end());
  return chosen;
}

std::vector<std::string> numbered_names(const char* prefix, Index count) {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(count));
  for (Index i = 0; i < count; ++i)
    names.push_back(prefix + std::to_string(i + 1));
  return names;
}

}  // namespace

void SimConfig::validate() const {
  if (n < 4) throw ConfigError("sim: n must be at least 4");
  if (p < 1 || q < 1) throw ConfigError("sim: p and q must be positive");
  if (block_rows < 1 || block_rows > p)
    throw ConfigError("sim: block_rows must lie in [1, p]");
  if (block_cols < 1 || block_cols > q)
    throw ConfigError("sim: block_cols must lie in [1, q]");
  if (!(rho_lo > 0.0 && rho_lo <= rho_hi && rho_hi < 1.0))
    throw ConfigError("sim: need 0 < rho_lo <= rho_hi < 1");
  if (replicates < 1) throw ConfigError("sim: replicates must be positive");
}

PlantedTruth build_truth(const SimConfig& config) {
  config.validate();
  Rng rng = Rng::stream(config.seed, kStreamTruth, 0);

  PlantedTruth truth;
  truth.p = config.p;
  truth.q = config.q;
  truth.i_x = sample_without_replacement(rng, config.p, config.block_rows);
  truth.i_y = sample_without_replacement(rng, config.q, config.block_cols);

  const double lo = std::sqrt(config.rho_lo);
  const double hi = std::sqrt(config.rho_hi);
  truth.alpha.resize(config.block_rows);
  truth.beta.resize(config.block_cols);
  for (Index i = 0; i < config.block_rows; ++i)
    truth.alpha[i] = rng.uniform(lo, hi);
  for (Index j = 0; j < config.block_cols; ++j)
    truth.beta[j] = rng.uniform(lo, hi);

  truth.sigma_xy_block = truth.alpha * truth.beta.transpose();

  // Population analog of the estimator: leading singular pair of the
  // cross-covariance block, normalized by the population quadratic forms.
  Eigen::BDCSVD<Matrix> svd(truth.sigma_xy_block,
                            Eigen::ComputeThinU | Eigen::ComputeThinV);
  if (svd.info() != Eigen::Success)
    throw SvdFailureError("SVD failed on the population block");
  const Vector a = svd.matrixU().col(0);
  const Vector b = svd.matrixV().col(0);

  const Vector& alpha = truth.alpha;
  const Vector& beta = truth.beta;
  // Sigma_X0 = diag(1 - alpha^2) + alpha alpha^T, likewise for Y0.
  const double qa = (a.array().square() * (1.0 - alpha.array().square())).sum() +
                    std::pow(a.dot(alpha), 2);
  const double qb = (b.array().square() * (1.0 - beta.array().square())).sum() +
                    std::pow(b.dot(beta), 2);
  const double numerator = std::abs(a.dot(truth.sigma_xy_block * b));
  truth.rho_c_pop = numerator / std::sqrt(qa * qb);
  return truth;
}

std::pair<RawMatrix, RawMatrix> sample(const PlantedTruth& truth,
                                       const SimConfig& config,
                                       int replicate) {
  config.validate();
  if (replicate < 0 || replicate >= config.replicates)
    throw ConfigError("replicate index out of range");

  Rng rng = Rng::stream(config.seed, kStreamSample,
                        static_cast<std::uint64_t>(replicate));
  const Index n = config.n;

  Vector z(n);
  for (Index s = 0; s < n; ++s) z[s] = rng.next_normal();

  auto draw = [&](Index cols, const IndexSet& planted,
                  const Vector& loadings) {
    Matrix m(n, cols);
    std::vector<Index> load_of(static_cast<std::size_t>(cols), -1);
    for (std::size_t k = 0; k < planted.size(); ++k)
      load_of[static_cast<std::size_t>(planted[k])] = static_cast<Index>(k);
    for (Index j = 0; j < cols; ++j) {
      const Index k = load_of[static_cast<std::size_t>(j)];
      if (k >= 0) {
        const double a = loadings[k];
        const double noise = std::sqrt(1.0 - a * a);
        for (Index s = 0; s < n; ++s)
          m(s, j) = a * z[s] + noise * rng.next_normal();
      } else {
        for (Index s = 0; s < n; ++s) m(s, j) = rng.next_normal();
      }
    }
    return m;
  };

  RawMatrix x;
  x.values = draw(config.p, truth.i_x, truth.alpha);
  x.column_names = numbered_names("x", config.p);
  RawMatrix y;
  y.values = draw(config.q, truth.i_y, truth.beta);
  y.column_names = numbered_names("y", config.q);
  return {std::move(x), std::move(y)};
}

}  // namespace gcca
