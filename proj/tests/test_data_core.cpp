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
#include <filesystem>
#include <fstream>

#include "gcca/csv.hpp"
#include "gcca/data_core.hpp"
#include "gcca/error.hpp"
#include "test_util.hpp"

using namespace gcca;

namespace {

RawMatrix three_col_raw() {
  Matrix m(4, 3);
  m << 1.0, 4.0, -2.0,  //
      2.0, 0.5, 7.0,    //
      3.0, -1.0, 0.0,   //
      4.0, 2.0, 1.0;
  return test::raw_from(m);
}

}  // namespace

TEST_CASE("standardize centers and scales to unit norm") {
  Matrix m(3, 1);
  m << 1.0, 2.0, 3.0;
  RawMatrix raw = test::raw_from(m);
  raw.values.conservativeResize(4, 1);
  raw.values << 1.0, 2.0, 3.0, 2.0;  // mean 2, centered {-1,0,1,0}
  const auto s = standardize(raw);
  const double inv = 1.0 / std::sqrt(2.0);
  CHECK(s.values(0, 0) == doctest::Approx(-inv).epsilon(1e-14));
  CHECK(s.values(1, 0) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(s.values(2, 0) == doctest::Approx(inv).epsilon(1e-14));
}

TEST_CASE("standardize invariants: mean zero, unit norm") {
  Rng rng(11);
  const auto raw = test::raw_from(test::random_matrix(rng, 23, 7, -5.0, 9.0));
  const auto s = standardize(raw);
  for (Index j = 0; j < s.cols(); ++j) {
    CHECK(std::abs(s.values.col(j).mean()) < 1e-10 / 23);
    CHECK(std::abs(s.values.col(j).norm() - 1.0) < 1e-10);
  }
}

TEST_CASE("standardize is idempotent") {
  Rng rng(12);
  const auto raw = test::raw_from(test::random_matrix(rng, 15, 4, -1.0, 1.0));
  const auto once = standardize(raw);
  RawMatrix again_raw;
  again_raw.values = once.values;
  again_raw.column_names = once.column_names;
  const auto twice = standardize(again_raw);
  CHECK((twice.values - once.values).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("standardize rejects bad input") {
  SUBCASE("constant column") {
    Matrix m(4, 1);
    m << 5.0, 5.0, 5.0, 5.0;
    CHECK_THROWS_AS(standardize(test::raw_from(m)), ConstantColumnError);
  }
  SUBCASE("too few rows") {
    Matrix m(3, 1);
    m << 1.0, 2.0, 3.0;
    CHECK_THROWS_AS(standardize(test::raw_from(m)), TooFewRowsError);
  }
  SUBCASE("non-finite") {
    Matrix m(4, 1);
    m << 1.0, std::nan(""), 3.0, 4.0;
    CHECK_THROWS_AS(standardize(test::raw_from(m)), NonFiniteError);
  }
}

TEST_CASE("standardize is invariant to positive column rescaling") {
  Rng rng(13);
  auto raw = test::raw_from(test::random_matrix(rng, 19, 5, -2.0, 4.0));
  const auto base = standardize(raw);
  for (Index j = 0; j < raw.cols(); ++j)
    raw.values.col(j) *= (1.0 + static_cast<double>(j)) * 37.5;
  const auto scaled = standardize(raw);
  CHECK((scaled.values - base.values).cwiseAbs().maxCoeff() < 1e-10);
}

TEST_CASE("cross_correlation equals Pearson, entrywise") {
  Rng rng(21);
  const auto xraw = test::raw_from(test::random_matrix(rng, 10, 3, -3.0, 3.0));
  const auto yraw = test::raw_from(test::random_matrix(rng, 10, 4, -1.0, 6.0));
  const auto xs = standardize(xraw);
  const auto ys = standardize(yraw);
  const Matrix r = cross_correlation(xs, ys);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 4; ++j) {
      const double want =
          test::naive_pearson(xraw.values.col(i), yraw.values.col(j));
      CHECK(std::abs(r(i, j) - want) < 1e-12);
    }
}

TEST_CASE("cross_correlation special columns") {
  const auto raw = three_col_raw();
  const auto xs = standardize(raw);
  RawMatrix neg = raw;
  neg.values = -raw.values;
  const auto ys = standardize(neg);
  const Matrix self = cross_correlation(xs, xs);
  const Matrix flip = cross_correlation(xs, ys);
  for (Index j = 0; j < 3; ++j) {
    CHECK(self(j, j) == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(flip(j, j) == doctest::Approx(-1.0).epsilon(1e-9));
  }
}

TEST_CASE("cross_correlation entries stay within [-1, 1]") {
  Rng rng(22);
  const auto xs =
      standardize(test::raw_from(test::random_matrix(rng, 12, 6, 0.0, 1.0)));
  const auto ys =
      standardize(test::raw_from(test::random_matrix(rng, 12, 9, -4.0, 2.0)));
  const Matrix r = cross_correlation(xs, ys);
  CHECK(r.cwiseAbs().maxCoeff() <= 1.0 + 1e-9);
}

TEST_CASE("cross_correlation invariant to identical row permutation") {
  Rng rng(23);
  const Matrix xv = test::random_matrix(rng, 14, 4, -1.0, 1.0);
  const Matrix yv = test::random_matrix(rng, 14, 5, -1.0, 1.0);
  const Matrix r0 = cross_correlation(standardize(test::raw_from(xv)),
                                      standardize(test::raw_from(yv)));

  std::vector<Index> perm = test::random_subset(rng, 14, 14);
  for (std::size_t k = perm.size() - 1; k > 0; --k)
    std::swap(perm[k], perm[rng.next_below(k + 1)]);
  Matrix xp(14, 4), yp(14, 5);
  for (Index s = 0; s < 14; ++s) {
    xp.row(s) = xv.row(perm[static_cast<std::size_t>(s)]);
    yp.row(s) = yv.row(perm[static_cast<std::size_t>(s)]);
  }
  const Matrix r1 = cross_correlation(standardize(test::raw_from(xp)),
                                      standardize(test::raw_from(yp)));
  CHECK((r1 - r0).cwiseAbs().maxCoeff() < 1e-12);
}

TEST_CASE("cross_correlation is bitwise deterministic across thread counts") {
  Rng rng(24);
  const auto xs =
      standardize(test::raw_from(test::random_matrix(rng, 30, 70, -1.0, 1.0)));
  const auto ys = standardize(
      test::raw_from(test::random_matrix(rng, 30, 600, -1.0, 1.0)));
  const Matrix a = cross_correlation(xs, ys, 1);
  const Matrix b = cross_correlation(xs, ys, 3);
  CHECK(a == b);  // bitwise
}

TEST_CASE("cross_correlation rejects mismatched row counts") {
  Rng rng(25);
  const auto xs =
      standardize(test::raw_from(test::random_matrix(rng, 10, 2, -1.0, 1.0)));
  const auto ys =
      standardize(test::raw_from(test::random_matrix(rng, 11, 2, -1.0, 1.0)));
  CHECK_THROWS_AS(cross_correlation(xs, ys), RowCountMismatchError);
}

TEST_CASE("truncate applies the strict threshold") {
  Matrix r(2, 2);
  r << 0.15, -0.5,  //
      0.2, 0.9;
  const auto g = truncate(r, 0.2);
  CHECK(g.r_trunc(0, 0) == 0.0);   // below
  CHECK(g.r_trunc(0, 1) == 0.5);   // absolute value
  CHECK(g.r_trunc(1, 0) == 0.0);   // equal to epsilon is cut
  CHECK(g.r_trunc(1, 1) == 0.9);
  CHECK(g.nnz == 2);
}

TEST_CASE("truncate validates epsilon") {
  const Matrix r = Matrix::Zero(2, 2);
  CHECK_THROWS_AS(truncate(r, 0.0), EpsilonOutOfRangeError);
  CHECK_THROWS_AS(truncate(r, 1.0), EpsilonOutOfRangeError);
  CHECK_THROWS_AS(truncate(r, -0.2), EpsilonOutOfRangeError);
}

TEST_CASE("truncate is monotone in epsilon and bounded by |r|") {
  Rng rng(31);
  const Matrix r = test::random_matrix(rng, 9, 11, -1.0, 1.0);
  const auto g1 = truncate(r, 0.2);
  const auto g2 = truncate(r, 0.5);
  for (Index i = 0; i < 9; ++i)
    for (Index j = 0; j < 11; ++j) {
      CHECK(g1.r_trunc(i, j) >= g2.r_trunc(i, j));
      CHECK(g1.r_trunc(i, j) <= std::abs(r(i, j)));
    }
}

TEST_CASE("truncate adjacency lists match the dense matrix") {
  Rng rng(32);
  const Matrix r = test::random_matrix(rng, 7, 8, -1.0, 1.0);
  const auto g = truncate(r, 0.35);
  Index listed = 0;
  for (Index i = 0; i < 7; ++i)
    for (const auto& [j, value] : g.row_entries[static_cast<std::size_t>(i)]) {
      CHECK(value == g.r_trunc(i, j));
      ++listed;
    }
  CHECK(listed == g.nnz);
  Index listed_cols = 0;
  for (Index j = 0; j < 8; ++j)
    for (const auto& [i, value] : g.col_entries[static_cast<std::size_t>(j)]) {
      CHECK(value == g.r_trunc(i, j));
      ++listed_cols;
    }
  CHECK(listed_cols == g.nnz);
}

TEST_CASE("csv round-trips matrices exactly") {
  Rng rng(41);
  Matrix m = test::random_matrix(rng, 6, 3, -1e6, 1e6);
  m(0, 0) = 0.1;                       // not exactly representable
  m(1, 1) = -3.0e-13;
  m(2, 2) = 12345678.90123456;
  const auto path = std::filesystem::temp_directory_path() / "gcca_rt.csv";
  write_matrix_csv(path, m, {"a", "b", "c"});
  const RawMatrix back = read_matrix_csv(path);
  REQUIRE(back.rows() == 6);
  REQUIRE(back.cols() == 3);
  CHECK(back.column_names == std::vector<std::string>{"a", "b", "c"});
  CHECK(back.values == m);  // bitwise
  std::filesystem::remove(path);
}

TEST_CASE("csv parse failures") {
  const auto dir = std::filesystem::temp_directory_path();
  auto write = [&](const char* name, const char* body) {
    const auto p = dir / name;
    std::ofstream(p) << body;
    return p;
  };
  SUBCASE("ragged row") {
    const auto p = write("gcca_bad1.csv", "a,b\n1,2\n3\n");
    CHECK_THROWS_AS(read_matrix_csv(p), CsvParseError);
    std::filesystem::remove(p);
  }
  SUBCASE("non-numeric field") {
    const auto p = write("gcca_bad2.csv", "a,b\n1,x\n");
    CHECK_THROWS_AS(read_matrix_csv(p), CsvParseError);
    std::filesystem::remove(p);
  }
  SUBCASE("nan rejected") {
    const auto p = write("gcca_bad3.csv", "a,b\n1,nan\n");
    CHECK_THROWS_AS(read_matrix_csv(p), NonFiniteError);
    std::filesystem::remove(p);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(read_matrix_csv(dir / "gcca_nope.csv"), CsvParseError);
  }
}
