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

#include <json.hpp>

#include <filesystem>
#include <fstream>

#include "gcca/configio.hpp"
#include "gcca/csv.hpp"
#include "gcca/data_core.hpp"
#include "gcca/error.hpp"
#include "gcca/serialize.hpp"
#include "gcca/synthgen.hpp"
#include "test_util.hpp"

using namespace gcca;
using nlohmann::json;

namespace {

GccaFit fitted_toy() {
  SimConfig sim;
  sim.n = 200;
  sim.p = 14;
  sim.q = 16;
  sim.block_rows = 3;
  sim.block_cols = 3;
  sim.rho_lo = 0.6;
  sim.rho_hi = 0.7;
  sim.seed = 31;
  sim.replicates = 1;
  const auto truth = build_truth(sim);
  auto [x, y] = sample(truth, sim, 0);
  GccaConfig cfg;
  cfg.epsilon = 0.3;
  cfg.max_subgraphs = 1;
  cfg.threads = 1;
  return fit(x, y, cfg);
}

std::filesystem::path temp_file(const char* name, const std::string& body) {
  const auto p = std::filesystem::temp_directory_path() / name;
  std::ofstream(p) << body;
  return p;
}

}  // namespace

TEST_CASE("format_double round-trips") {
  for (const double v : {0.1, -3.0e-13, 1.0 / 3.0, 12345678.90123456, 0.0}) {
    const std::string s = format_double(v);
    CHECK(std::stod(s) == v);
  }
}

TEST_CASE("fit json carries the full contract and is stable") {
  const GccaFit f = fitted_toy();
  const std::string text = fit_json(f);
  CHECK(text == fit_json(f));

  const json j = json::parse(text);
  CHECK(j.at("lambda_star").get<double>() == f.lambda_star);
  CHECK(j.at("rho_hat").get<double>() == f.rho_hat);
  CHECK(j.at("i_x").size() == f.i_x.size());
  CHECK(j.at("a_hat").size() == f.i_x.size());
  CHECK(j.at("b_hat").size() == f.i_y.size());
  CHECK(j.at("i_x_names").size() == f.i_x.size());
  CHECK(j.at("diagnostics").size() == f.diagnostics.size());
  CHECK(j.at("block_signs").size() == f.subgraphs.subgraphs.size());
  // Full precision survives the round trip.
  CHECK(j.at("rho_hat").get<double>() == f.rho_hat);
}

TEST_CASE("biclique set json lists blocks with named members") {
  const GccaFit f = fitted_toy();
  const json j =
      json::parse(biclique_set_json(f.subgraphs, f.x_names, f.y_names));
  CHECK(j.at("lambda").get<double>() == f.lambda_star);
  REQUIRE(j.at("subgraphs").size() == 1);
  const auto& s = j.at("subgraphs")[0];
  CHECK(s.at("u").size() == s.at("u_names").size());
  CHECK(s.at("score").get<double>() == f.subgraphs.subgraphs[0].score);
  CHECK(j.at("i_x").get<std::vector<Index>>() == f.i_x);
}

TEST_CASE("lambda score csv has one row per candidate") {
  const GccaFit f = fitted_toy();
  const std::string csv = lambda_scores_csv(f.diagnostics);
  const auto rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == static_cast<long>(f.diagnostics.size()) + 1);
  CHECK(csv.rfind("lambda,pi0,pi1,pi,divergence,n_subgraphs,n_i_x,n_i_y\n",
                  0) == 0);
}

TEST_CASE("heatmap csv enumerates the selected submatrix block by block") {
  const GccaFit f = fitted_toy();
  // Only the structure is under test, so a zero matrix of the right shape
  // stands in for the signed correlations.
  const std::string csv = heatmap_csv(f, Matrix::Zero(f.p, f.q));
  const auto rows = std::count(csv.begin(), csv.end(), '\n');
  CHECK(rows == static_cast<long>(f.i_x.size() * f.i_y.size()) + 1);
  CHECK(csv.rfind("row_name,col_name,r,in_subgraph,block_id\n", 0) == 0);
  CHECK(csv.find(",true,0\n") != std::string::npos);
}

TEST_CASE("study config loads from the flat toml subset") {
  const auto p = temp_file("gcca_cfg.toml", R"(
# comment
[sim]
n = 500
p = 1000
q = 1500
block_rows = 20
block_cols = 30
rho_lo = 0.3
rho_hi = 0.4
seed = 20260810
replicates = 100

[gcca]
epsilon = 0.15
lambda_grid = [0.5, 0.55, 0.6]
max_subgraphs = 1
min_block_mean = 0.15

[convergence]
n_values = [250, 500, 1000, 2000]
)");
  const StudyConfig cfg = load_study_config(p);
  CHECK(cfg.sim.n == 500);
  CHECK(cfg.sim.p == 1000);
  CHECK(cfg.sim.rho_hi == 0.4);
  CHECK(cfg.sim.seed == 20260810);
  CHECK(cfg.gcca.epsilon == 0.15);
  CHECK(cfg.gcca.lambda_grid == std::vector<double>{0.5, 0.55, 0.6});
  CHECK(cfg.gcca.max_subgraphs == 1);
  CHECK(cfg.gcca.min_block_mean.value() == 0.15);
  CHECK(cfg.convergence_n == std::vector<Index>{250, 500, 1000, 2000});
  std::filesystem::remove(p);
}

TEST_CASE("study config loads the same structure from json") {
  const auto p = temp_file("gcca_cfg.json", R"({
    "sim": {"n": 100, "p": 20, "q": 25, "block_rows": 3, "block_cols": 4,
            "rho_lo": 0.5, "rho_hi": 0.6, "seed": 7, "replicates": 5},
    "gcca": {"epsilon": 0.25}
  })");
  const StudyConfig cfg = load_study_config(p);
  CHECK(cfg.sim.q == 25);
  CHECK(cfg.gcca.epsilon == 0.25);
  CHECK(cfg.gcca.max_subgraphs == 5);  // default where silent
  CHECK_FALSE(cfg.gcca.min_block_mean.has_value());
  CHECK(cfg.convergence_n.empty());
  std::filesystem::remove(p);
}

TEST_CASE("study config rejects malformed input") {
  SUBCASE("missing sim section") {
    const auto p = temp_file("gcca_bad_cfg1.toml", "[gcca]\nepsilon = 0.2\n");
    CHECK_THROWS_AS(load_study_config(p), ConfigError);
    std::filesystem::remove(p);
  }
  SUBCASE("missing required key") {
    const auto p = temp_file("gcca_bad_cfg2.toml",
                             "[sim]\nn = 100\np = 10\nq = 10\n");
    CHECK_THROWS_AS(load_study_config(p), ConfigError);
    std::filesystem::remove(p);
  }
  SUBCASE("bad toml syntax") {
    const auto p = temp_file("gcca_bad_cfg3.toml", "[sim\nn = 100\n");
    CHECK_THROWS_AS(load_study_config(p), ConfigError);
    std::filesystem::remove(p);
  }
  SUBCASE("unknown extension") {
    const auto p = temp_file("gcca_bad_cfg4.yaml", "sim:\n");
    CHECK_THROWS_AS(load_study_config(p), ConfigError);
    std::filesystem::remove(p);
  }
  SUBCASE("invalid sim values") {
    const auto p = temp_file("gcca_bad_cfg5.toml", R"(
[sim]
n = 100
p = 10
q = 10
block_rows = 11
block_cols = 2
rho_lo = 0.3
rho_hi = 0.4
seed = 1
replicates = 2
)");
    CHECK_THROWS_AS(load_study_config(p), ConfigError);
    std::filesystem::remove(p);
  }
}

TEST_CASE("sim report serializations agree on the numbers") {
  SimConfig sim;
  sim.n = 150;
  sim.p = 15;
  sim.q = 18;
  sim.block_rows = 3;
  sim.block_cols = 3;
  sim.rho_lo = 0.6;
  sim.rho_hi = 0.7;
  sim.seed = 11;
  sim.replicates = 3;
  GccaConfig g;
  g.epsilon = 0.3;
  g.max_subgraphs = 1;
  g.threads = 1;
  const SimReport report = run_study(sim, g);

  const json j = json::parse(sim_report_json(report));
  CHECK(j.at("mse").get<double>() == report.mse);
  CHECK(j.at("per_replicate").size() == 3);

  const std::string t2 = recovery_table_csv({report});
  const std::string t3 = estimation_table_csv({report});
  CHECK(t2.find(format_double(report.pct_both_1)) != std::string::npos);
  CHECK(t3.find(format_double(report.mse)) != std::string::npos);

  const std::string text = report_text_table(report);
  CHECK(text.find("% both=1") != std::string::npos);

  const PlantedTruth truth = build_truth(sim);
  const json tj = json::parse(truth_json(truth));
  CHECK(tj.at("i_x").size() == 3);
  CHECK(tj.at("rho_c_pop").get<double>() == truth.rho_c_pop);
}
