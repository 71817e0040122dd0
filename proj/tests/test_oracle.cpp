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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "gcca/data_core.hpp"
#include "gcca/error.hpp"
#include "gcca/extraction.hpp"
#include "gcca/oracle.hpp"
#include "test_util.hpp"

using namespace gcca;

TEST_CASE("a dominant singleton beats every larger block") {
  Matrix r = Matrix::Zero(2, 2);
  r(0, 1) = 0.9;
  const auto g = truncate(r, 0.2);
  const auto res = exhaustive_best_biclique(g, 0.5);
  CHECK(res.best_u == IndexSet{0});
  CHECK(res.best_v == IndexSet{1});
  CHECK(res.best_score == doctest::Approx(0.9).epsilon(1e-14));
  CHECK(res.enumerated == 9);  // (2^2 - 1)^2
}

TEST_CASE("a uniform graph is maximized by the full block at lambda 1/2") {
  const double c = 0.6;
  const Index p = 4, q = 5;
  const auto g = truncate(Matrix::Constant(p, q, c), 0.2);
  const auto res = exhaustive_best_biclique(g, 0.5);
  CHECK(res.best_u == full_index_set(p));
  CHECK(res.best_v == full_index_set(q));
  // score = c * |u||v| / sqrt(|u||v|) = c * sqrt(pq), increasing in size
  CHECK(res.best_score ==
        doctest::Approx(c * std::sqrt(static_cast<double>(p * q)))
            .epsilon(1e-12));
  CHECK(res.enumerated == static_cast<std::uint64_t>((1 << p) - 1) *
                              static_cast<std::uint64_t>((1 << q) - 1));
}

TEST_CASE("oracle and greedy agree on the 5x4 planted instance") {
  Matrix r = Matrix::Zero(5, 4);
  r(0, 0) = 0.8;
  r(0, 1) = 0.7;
  r(1, 0) = 0.75;
  r(1, 1) = 0.85;
  const auto g = truncate(r, 0.2);
  const auto oracle = exhaustive_best_biclique(g, 0.5);
  const auto [greedy, traj] =
      extract_one(g, full_index_set(5), full_index_set(4), 0.5);
  CHECK(oracle.best_u == IndexSet{0, 1});
  CHECK(oracle.best_v == IndexSet{0, 1});
  CHECK(greedy.u == oracle.best_u);
  CHECK(greedy.v == oracle.best_v);
  CHECK(greedy.score == doctest::Approx(oracle.best_score).epsilon(1e-12));
}

TEST_CASE("oracle ties prefer smaller area, then lexicographic sets") {
  // Two identical isolated cells: equal scores, equal area; {0},{0} is the
  // lexicographically first pair.
  Matrix r = Matrix::Zero(3, 3);
  r(0, 0) = 0.5;
  r(2, 2) = 0.5;
  const auto g = truncate(r, 0.2);
  const auto res = exhaustive_best_biclique(g, 0.5);
  CHECK(res.best_u == IndexSet{0});
  CHECK(res.best_v == IndexSet{0});
}

TEST_CASE("oracle refuses oversized instances") {
  const auto g = truncate(Matrix::Zero(13, 4), 0.2);
  CHECK_THROWS_AS(exhaustive_best_biclique(g, 0.5), InstanceTooLargeError);
}

TEST_CASE("naive_eq5 reproduces singleton correlations and guards size") {
  Rng rng(501);
  const auto x = standardize(
      test::raw_from(test::random_matrix(rng, 18, 4, -1.0, 1.0)));
  const auto y = standardize(
      test::raw_from(test::random_matrix(rng, 18, 4, -1.0, 1.0)));
  const double r23 = x.values.col(2).dot(y.values.col(3));
  CHECK(naive_eq5(x, y, {2}, {3}) ==
        doctest::Approx(std::abs(r23)).epsilon(1e-12));

  IndexSet big;
  for (Index i = 0; i < 51; ++i) big.push_back(i);
  CHECK_THROWS_AS(naive_eq5(x, y, big, {0}), InstanceTooLargeError);
  CHECK_THROWS_AS(naive_eq5(x, y, {}, {0}), EmptyIndexSetError);
}

TEST_CASE("naive_eq5 is exact on an exact rank-1 cross product") {
  Rng rng(502);
  Vector u(3), v(4);
  u << 0.6, -0.2, 0.4;
  v << 0.3, 0.5, -0.1, 0.7;
  u.normalize();
  v.normalize();
  const Matrix noise = test::random_matrix(rng, 8, 3, -1.0, 1.0);
  Eigen::HouseholderQR<Matrix> qr(noise);
  const Matrix q1 = qr.householderQ() * Matrix::Identity(8, 3);
  StandardizedMatrix x;
  x.values = q1;
  StandardizedMatrix y;
  y.values = q1 * (0.75 * u * v.transpose());
  // For this construction X0 a = Q1 u (norm 1) and Y0 b = 0.75 Q1 u, so the
  // normalized correlation is exactly 1.
  CHECK(naive_eq5(x, y, full_index_set(3), full_index_set(4)) ==
        doctest::Approx(1.0).epsilon(1e-9));
}
