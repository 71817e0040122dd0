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

#include <benchmark/benchmark.h>

#include "gcca/data_core.hpp"
#include "gcca/rng.hpp"

namespace {

using namespace gcca;

StandardizedMatrix random_standardized(std::uint64_t seed, Index n,
                                       Index cols) {
  Rng rng(seed);
  RawMatrix raw;
  raw.values.resize(n, cols);
  for (Index i = 0; i < n; ++i)
    for (Index j = 0; j < cols; ++j) raw.values(i, j) = rng.next_normal();
  return standardize(raw);
}

void BM_Standardize(benchmark::State& state) {
  Rng rng(7);
  RawMatrix raw;
  raw.values.resize(500, state.range(0));
  for (Index i = 0; i < raw.values.size(); ++i)
    raw.values.data()[i] = rng.next_normal();
  for (auto _ : state) {
    auto out = standardize(raw);
    benchmark::DoNotOptimize(out);
  }
}
BENCHMARK(BM_Standardize)->Range(128, 2048);

void BM_CrossCorrelation(benchmark::State& state) {
  const Index p = state.range(0);
  const auto x = random_standardized(1, 500, p);
  const auto y = random_standardized(2, 500, (p * 3) / 2);
  const unsigned threads = static_cast<unsigned>(state.range(1));
  for (auto _ : state) {
    Matrix r = cross_correlation(x, y, threads);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_CrossCorrelation)
    ->Args({256, 1})
    ->Args({1024, 1})
    ->Args({1024, 2})
    ->Unit(benchmark::kMillisecond);

void BM_Truncate(benchmark::State& state) {
  Rng rng(9);
  const Index p = state.range(0);
  const Index q = (p * 3) / 2;
  Matrix r(p, q);
  for (Index i = 0; i < r.size(); ++i)
    r.data()[i] = rng.next_normal() * 0.08;
  for (auto _ : state) {
    auto g = truncate(r, 0.2);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(BM_Truncate)->Range(256, 2048)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
