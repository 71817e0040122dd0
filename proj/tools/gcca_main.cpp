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

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "gcca/configio.hpp"
#include "gcca/csv.hpp"
#include "gcca/data_core.hpp"
#include "gcca/error.hpp"
#include "gcca/estimation.hpp"
#include "gcca/evalmetrics.hpp"
#include "gcca/extraction.hpp"
#include "gcca/oracle.hpp"
#include "gcca/rng.hpp"
#include "gcca/serialize.hpp"
#include "gcca/synthgen.hpp"
#include "gcca/version.hpp"

namespace fs = std::filesystem;
using nlohmann::ordered_json;

namespace {

struct CommonOptions {
  std::optional<double> epsilon;
  std::vector<double> lambda_grid;
  std::optional<int> max_subgraphs;
  std::optional<double> min_block_mean;
  unsigned threads = 0;
  std::string output_dir = "gcca_out";
  std::vector<std::string> emit = {"json", "csv"};
};

void register_common(CLI::App* cmd, CommonOptions* opt) {
  cmd->add_option("--epsilon", opt->epsilon,
                  "correlation truncation threshold in (0,1) [default 0.2]");
  cmd->add_option("--lambda-grid", opt->lambda_grid,
                  "lambda candidates in [0.5,1] [default 0.5:0.05:0.9]")
      ->delimiter(',');
  cmd->add_option("--max-subgraphs", opt->max_subgraphs,
                  "cap on extracted subgraphs [default 5]");
  cmd->add_option("--min-block-mean", opt->min_block_mean,
                  "noise floor for a block's mean truncated correlation "
                  "[default: epsilon]");
  cmd->add_option("--threads", opt->threads,
                  "worker threads, 0 = all cores; results never depend on it");
  cmd->add_option("-o,--output-dir", opt->output_dir, "output directory");
  cmd->add_option("--emit", opt->emit, "artifacts to write: json, csv, table")
      ->delimiter(',')
      ->check(CLI::IsMember({"json", "csv", "table"}));
  cmd->add_flag_callback(
      "--emit-table", [opt] { opt->emit.push_back("table"); },
      "shorthand for adding 'table' to --emit");
}

// CLI flag > config file value > built-in default.
gcca::GccaConfig merge_gcca(const CommonOptions& opt,
                            const gcca::GccaConfig& file_cfg) {
  gcca::GccaConfig cfg = file_cfg;
  if (opt.epsilon) cfg.epsilon = *opt.epsilon;
  if (!opt.lambda_grid.empty()) cfg.lambda_grid = opt.lambda_grid;
  if (opt.max_subgraphs) cfg.max_subgraphs = *opt.max_subgraphs;
  if (opt.min_block_mean) cfg.min_block_mean = *opt.min_block_mean;
  cfg.threads = opt.threads;
  cfg.validate();
  return cfg;
}

bool wants(const CommonOptions& opt, const char* what) {
  return std::find(opt.emit.begin(), opt.emit.end(), what) != opt.emit.end();
}

ordered_json gcca_config_manifest(const gcca::GccaConfig& cfg) {
  ordered_json j;
  j["epsilon"] = cfg.epsilon;
  j["lambda_grid"] = cfg.lambda_grid;
  j["max_subgraphs"] = cfg.max_subgraphs;
  j["min_block_mean"] = cfg.resolved_min_block_mean();
  return j;
}

void write_manifest(const fs::path& dir, const std::string& subcommand,
                    ordered_json detail) {
  ordered_json j;
  j["tool"] = "gcca";
  j["version"] = gcca::kVersion;
  j["subcommand"] = subcommand;
  j["detail"] = std::move(detail);
  gcca::write_text_file(dir / "manifest.json", j.dump(2) + "\n");
}

int run_fit(const std::string& x_csv, const std::string& y_csv,
            const CommonOptions& opt) {
  const gcca::GccaConfig cfg = merge_gcca(opt, {});
  const gcca::RawMatrix x = gcca::read_matrix_csv(x_csv);
  const gcca::RawMatrix y = gcca::read_matrix_csv(y_csv);
  if (x.rows() != y.rows())
    throw gcca::RowCountMismatchError(
        x_csv + " has " + std::to_string(x.rows()) + " subjects but " + y_csv +
        " has " + std::to_string(y.rows()));

  const gcca::GccaFit result = gcca::fit(x, y, cfg);

  const fs::path dir(opt.output_dir);
  fs::create_directories(dir);
  if (wants(opt, "json")) {
    gcca::write_text_file(dir / "fit.json", gcca::fit_json(result));
    gcca::write_text_file(
        dir / "subgraphs.json",
        gcca::biclique_set_json(result.subgraphs, result.x_names,
                                result.y_names));
  }
  if (wants(opt, "csv")) {
    gcca::write_text_file(dir / "lambda_scores.csv",
                          gcca::lambda_scores_csv(result.diagnostics));
    // Rebuild R for the heatmap; cheap next to the fit itself.
    const auto xs = gcca::standardize(x);
    const auto ys = gcca::standardize(y);
    const gcca::Matrix r =
        gcca::cross_correlation(xs, ys, cfg.resolved_threads());
    gcca::write_text_file(dir / "heatmap.csv", gcca::heatmap_csv(result, r));
  }
  if (wants(opt, "table")) {
    std::cout << "lambda* = " << result.lambda_star
              << "  |I_X| = " << result.i_x.size()
              << "  |I_Y| = " << result.i_y.size()
              << "  rho_hat = " << result.rho_hat << "\n";
    for (std::size_t c = 0; c < result.subgraphs.subgraphs.size(); ++c) {
      const auto& b = result.subgraphs.subgraphs[c];
      std::cout << "  subgraph " << c << ": " << b.u.size() << " x "
                << b.v.size() << "  block_mean = " << b.block_mean << "\n";
    }
  }

  ordered_json detail;
  detail["x_csv"] = x_csv;
  detail["y_csv"] = y_csv;
  detail["config"] = gcca_config_manifest(cfg);
  write_manifest(dir, "fit", std::move(detail));
  return 0;
}

int run_simulate(const std::string& config_path, const CommonOptions& opt,
                 const std::vector<gcca::Index>& convergence_override,
                 bool dump_first_replicate,
                 std::optional<std::uint64_t> seed_override) {
  gcca::StudyConfig file_cfg = gcca::load_study_config(config_path);
  if (seed_override) file_cfg.sim.seed = *seed_override;
  gcca::GccaConfig cfg = merge_gcca(opt, file_cfg.gcca);

  const fs::path dir(opt.output_dir);
  fs::create_directories(dir);

  ordered_json detail;
  detail["config_file"] = config_path;
  detail["seed"] = file_cfg.sim.seed;
  detail["config"] = gcca_config_manifest(cfg);

  if (dump_first_replicate) {
    const auto truth = gcca::build_truth(file_cfg.sim);
    auto [x, y] = gcca::sample(truth, file_cfg.sim, 0);
    gcca::write_matrix_csv(dir / "replicate0_x.csv", x.values, x.column_names);
    gcca::write_matrix_csv(dir / "replicate0_y.csv", y.values, y.column_names);
    gcca::write_text_file(dir / "replicate0_truth.json",
                          gcca::truth_json(truth));
  }

  const std::vector<gcca::Index>& conv_n = convergence_override.empty()
                                               ? file_cfg.convergence_n
                                               : convergence_override;
  if (!conv_n.empty()) {
    const gcca::ConvergenceResult conv =
        gcca::convergence_study(file_cfg.sim, conv_n, cfg);
    if (wants(opt, "json"))
      gcca::write_text_file(dir / "convergence.json",
                            gcca::convergence_json(conv));
    if (wants(opt, "csv"))
      gcca::write_text_file(dir / "convergence.csv",
                            gcca::convergence_csv(conv));
    if (wants(opt, "table"))
      std::cout << "log-log slope of rmse vs n: " << conv.slope << "\n";
    detail["convergence_n"] = conv_n;
    write_manifest(dir, "simulate", std::move(detail));
    return 0;
  }

  const gcca::SimReport report = gcca::run_study(file_cfg.sim, cfg);
  if (wants(opt, "json"))
    gcca::write_text_file(dir / "report.json", gcca::sim_report_json(report));
  if (wants(opt, "csv")) {
    gcca::write_text_file(dir / "recovery_table.csv",
                          gcca::recovery_table_csv({report}));
    gcca::write_text_file(dir / "estimation_table.csv",
                          gcca::estimation_table_csv({report}));
  }
  if (wants(opt, "table")) std::cout << gcca::report_text_table(report);
  write_manifest(dir, "simulate", std::move(detail));
  return 0;
}

int run_oracle_check(int instances, std::uint64_t seed) {
  using gcca::Index;
  int agree = 0;
  for (int k = 0; k < instances; ++k) {
    gcca::Rng rng(seed + static_cast<std::uint64_t>(k));
    // Planted instance in the separated regime: every block value is at
    // least three times any surviving off-block value.
    gcca::Matrix r = gcca::Matrix::Zero(8, 8);
    const Index bu = 2 + static_cast<Index>(rng.next_below(3));
    const Index bv = 2 + static_cast<Index>(rng.next_below(3));
    std::vector<Index> rows, cols;
    for (Index i = 0; i < 8; ++i) rows.push_back(i);
    cols = rows;
    for (Index i = 0; i < bu; ++i) {
      const Index off = static_cast<Index>(
          rng.next_below(static_cast<std::uint64_t>(8 - i)));
      std::swap(rows[static_cast<std::size_t>(i)],
                rows[static_cast<std::size_t>(i + off)]);
    }
    for (Index j = 0; j < bv; ++j) {
      const Index off = static_cast<Index>(
          rng.next_below(static_cast<std::uint64_t>(8 - j)));
      std::swap(cols[static_cast<std::size_t>(j)],
                cols[static_cast<std::size_t>(j + off)]);
    }
    for (Index a = 0; a < bu; ++a)
      for (Index b = 0; b < bv; ++b)
        r(rows[static_cast<std::size_t>(a)],
          cols[static_cast<std::size_t>(b)]) = rng.uniform(0.75, 0.9);
    for (int noise = 0; noise < 4; ++noise) {
      const Index i = static_cast<Index>(rng.next_below(8));
      const Index j = static_cast<Index>(rng.next_below(8));
      if (r(i, j) == 0.0) r(i, j) = rng.uniform(0.21, 0.25);
    }

    const auto g = gcca::truncate(r, 0.2);
    const auto [greedy, traj] = gcca::extract_one(
        g, gcca::full_index_set(8), gcca::full_index_set(8), 0.5);
    const auto oracle = gcca::exhaustive_best_biclique(g, 0.5);
    if (greedy.u == oracle.best_u && greedy.v == oracle.best_v) ++agree;
  }
  std::cout << "oracle agreement: " << agree << "/" << instances << "\n";
  const bool ok = agree * 100 >= instances * 95;
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph canonical correlation analysis"};
  app.set_version_flag("--version", gcca::kVersion);
  app.require_subcommand(1);

  CommonOptions fit_opt;
  std::string x_csv, y_csv;
  CLI::App* fit_cmd = app.add_subcommand(
      "fit", "fit on two CSV files (rows = subjects, header = names)");
  fit_cmd->add_option("x_csv", x_csv, "X data CSV")->required();
  fit_cmd->add_option("y_csv", y_csv, "Y data CSV")->required();
  register_common(fit_cmd, &fit_opt);

  CommonOptions sim_opt;
  std::string config_path;
  std::vector<gcca::Index> convergence_n;
  bool dump_first = false;
  std::optional<std::uint64_t> seed_override;
  CLI::App* sim_cmd = app.add_subcommand(
      "simulate", "run a Monte-Carlo study from a .toml/.json config");
  sim_cmd->add_option("config", config_path, "study config file")->required();
  sim_cmd
      ->add_option("--convergence", convergence_n,
                   "comma-separated n values: run the rate study instead")
      ->delimiter(',');
  sim_cmd->add_flag("--dump-first-replicate", dump_first,
                    "also write replicate 0 as CSV plus the truth JSON");
  sim_cmd->add_option("--seed", seed_override,
                      "override the config file's seed");
  register_common(sim_cmd, &sim_opt);

  int oracle_instances = 100;
  std::uint64_t oracle_seed = 2000;
  CLI::App* oracle_cmd = app.add_subcommand(
      "oracle-check", "greedy vs exhaustive-search agreement suite");
  oracle_cmd->group("");  // maintenance command, hidden from help
  oracle_cmd->add_option("--instances", oracle_instances, "instance count");
  oracle_cmd->add_option("--seed", oracle_seed, "base seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;  // usage errors are exit 1
  }

  try {
    if (fit_cmd->parsed()) return run_fit(x_csv, y_csv, fit_opt);
    if (sim_cmd->parsed())
      return run_simulate(config_path, sim_opt, convergence_n, dump_first,
                          seed_override);
    if (oracle_cmd->parsed())
      return run_oracle_check(oracle_instances, oracle_seed);
  } catch (const gcca::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return static_cast<int>(e.category());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
