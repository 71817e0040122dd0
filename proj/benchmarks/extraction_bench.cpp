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
#include "gcca/extraction.hpp"
#include "gcca/rng.hpp"
#include "gcca/tuning.hpp"

namespace {

using namespace gcca;

// Sparse planted graph of the shape the sweep sees in practice: one strong
// block plus a few scattered above-threshold cells.
CorrelationGraph make_graph(Index p, Index q, Index bu, Index bv) {
  Rng rng(42);
  Matrix r = Matrix::Zero(p, q);
  for (Index i = 0; i < bu; ++i)
    for (Index j = 0; j < bv; ++j) r(i, j) = rng.uniform(0.3, 0.4);
  const Index noise = (p * q) / 100000 + 16;
  for (Index k = 0; k < noise; ++k)
    r(static_cast<Index>(rng.next_below(static_cast<std::uint64_t>(p))),
      static_cast<Index>(rng.next_below(static_cast<std::uint64_t>(q)))) =
        rng.uniform(0.21, 0.27);
  return truncate(r, 0.2);
}

void BM_ExtractOne(benchmark::State& state) {
  const Index p = state.range(0);
  const Index q = (state.range(0) * 3) / 2;
  const auto g = make_graph(p, q, 20, 30);
  const auto rows = full_index_set(p);
  const auto cols = full_index_set(q);
  for (auto _ : state) {
    auto result = extract_one(g, rows, cols, 0.65);
    benchmark::DoNotOptimize(result);
  }
  state.SetComplexityN(p + q);
}
BENCHMARK(BM_ExtractOne)->Range(64, 4096)->Complexity(benchmark::oNSquared);

void BM_SelectLambda(benchmark::State& state) {
  const Index p = state.range(0);
  const Index q = (state.range(0) * 3) / 2;
  const auto g = make_graph(p, q, 20, 30);
  const std::vector<double> grid = {0.5, 0.55, 0.6, 0.65, 0.7,
                                    0.75, 0.8, 0.85, 0.9};
  for (auto _ : state) {
    auto sel = select_lambda(g, grid, 1, 0.2, 2);
    benchmark::DoNotOptimize(sel);
  }
}
BENCHMARK(BM_SelectLambda)->Range(256, 1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
