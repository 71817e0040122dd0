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

#include "gcca/serialize.hpp"

#include <json.hpp>

#include <iomanip>
#include <sstream>

#include "gcca/csv.hpp"

namespace gcca {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

json index_array(const IndexSet& s) {
  json arr = json::array();
  for (const Index i : s) arr.push_back(i);
  return arr;
}

json name_array(const IndexSet& s, const std::vector<std::string>& names) {
  json arr = json::array();
  for (const Index i : s) arr.push_back(names[static_cast<std::size_t>(i)]);
  return arr;
}

json vector_array(const Vector& v) {
  json arr = json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

ordered_json subgraph_json(const Biclique& b,
                           const std::vector<std::string>& x_names,
                           const std::vector<std::string>& y_names) {
  ordered_json j;
  j["u"] = index_array(b.u);
  j["v"] = index_array(b.v);
  if (!x_names.empty()) j["u_names"] = name_array(b.u, x_names);
  if (!y_names.empty()) j["v_names"] = name_array(b.v, y_names);
  j["score"] = b.score;
  j["block_mean"] = b.block_mean;
  return j;
}

ordered_json sim_config_json(const SimConfig& c) {
  ordered_json j;
  j["n"] = c.n;
  j["p"] = c.p;
  j["q"] = c.q;
  j["block_rows"] = c.block_rows;
  j["block_cols"] = c.block_cols;
  j["rho_lo"] = c.rho_lo;
  j["rho_hi"] = c.rho_hi;
  j["seed"] = c.seed;
  j["replicates"] = c.replicates;
  return j;
}

ordered_json gcca_config_json(const GccaConfig& c) {
  ordered_json j;
  j["epsilon"] = c.epsilon;
  j["lambda_grid"] = c.lambda_grid;
  j["max_subgraphs"] = c.max_subgraphs;
  j["min_block_mean"] = c.resolved_min_block_mean();
  return j;
}

std::string setting_label(const SimConfig& c) {
  std::ostringstream out;
  out << "(" << c.block_rows << "," << c.block_cols << ") rho[" << c.rho_lo
      << "," << c.rho_hi << "] n=" << c.n;
  return out.str();
}

}  // namespace

std::string biclique_set_json(const BicliqueSet& bset,
                              const std::vector<std::string>& x_names,
                              const std::vector<std::string>& y_names) {
  ordered_json j;
  j["lambda"] = bset.lambda;
  j["subgraphs"] = json::array();
  for (const auto& b : bset.subgraphs)
    j["subgraphs"].push_back(subgraph_json(b, x_names, y_names));
  j["i_x"] = index_array(bset.i_x);
  j["i_y"] = index_array(bset.i_y);
  return j.dump(2) + "\n";
}

std::string fit_json(const GccaFit& fit) {
  ordered_json j;
  j["lambda_star"] = fit.lambda_star;
  j["rho_hat"] = fit.rho_hat;
  j["i_x"] = index_array(fit.i_x);
  j["i_y"] = index_array(fit.i_y);
  if (!fit.x_names.empty()) j["i_x_names"] = name_array(fit.i_x, fit.x_names);
  if (!fit.y_names.empty()) j["i_y_names"] = name_array(fit.i_y, fit.y_names);
  j["a_hat"] = vector_array(fit.a_hat);
  j["b_hat"] = vector_array(fit.b_hat);

  json signs = json::array();
  for (Index c = 0; c < fit.block_signs.rows(); ++c) {
    json row = json::array();
    for (Index d = 0; d < fit.block_signs.cols(); ++d)
      row.push_back(fit.block_signs(c, d));
    signs.push_back(row);
  }
  j["block_signs"] = signs;

  j["subgraphs"] = json::array();
  for (const auto& b : fit.subgraphs.subgraphs)
    j["subgraphs"].push_back(subgraph_json(b, fit.x_names, fit.y_names));

  j["diagnostics"] = json::array();
  for (const auto& s : fit.diagnostics) {
    ordered_json d;
    d["lambda"] = s.lambda;
    d["pi0"] = s.pi0;
    d["pi1"] = s.pi1;
    d["pi"] = s.pi;
    d["divergence"] = s.divergence;
    d["n_subgraphs"] = s.biclique_set.subgraphs.size();
    j["diagnostics"].push_back(d);
  }
  return j.dump(2) + "\n";
}

std::string lambda_scores_csv(const std::vector<KlScore>& scores) {
  std::ostringstream out;
  out << "lambda,pi0,pi1,pi,divergence,n_subgraphs,n_i_x,n_i_y\n";
  for (const auto& s : scores) {
    out << format_double(s.lambda) << ',' << format_double(s.pi0) << ','
        << format_double(s.pi1) << ',' << format_double(s.pi) << ','
        << format_double(s.divergence) << ',' << s.biclique_set.subgraphs.size()
        << ',' << s.biclique_set.i_x.size() << ',' << s.biclique_set.i_y.size()
        << '\n';
  }
  return out.str();
}

std::string heatmap_csv(const GccaFit& fit, const Matrix& r) {
  auto row_label = [&](Index i) {
    return fit.x_names.empty() ? "x" + std::to_string(i + 1)
                               : fit.x_names[static_cast<std::size_t>(i)];
  };
  auto col_label = [&](Index j) {
    return fit.y_names.empty() ? "y" + std::to_string(j + 1)
                               : fit.y_names[static_cast<std::size_t>(j)];
  };

  // Rows and columns in block order; membership lookup per block id.
  const auto& blocks = fit.subgraphs.subgraphs;
  std::vector<int> row_block(static_cast<std::size_t>(fit.p), -1);
  std::vector<int> col_block(static_cast<std::size_t>(fit.q), -1);
  for (std::size_t c = 0; c < blocks.size(); ++c) {
    for (const Index i : blocks[c].u)
      row_block[static_cast<std::size_t>(i)] = static_cast<int>(c);
    for (const Index j : blocks[c].v)
      col_block[static_cast<std::size_t>(j)] = static_cast<int>(c);
  }

  std::ostringstream out;
  out << "row_name,col_name,r,in_subgraph,block_id\n";
  for (const auto& bu : blocks) {
    for (const Index i : bu.u) {
      for (const auto& bv : blocks) {
        for (const Index j : bv.v) {
          const int bi = row_block[static_cast<std::size_t>(i)];
          const bool same = bi == col_block[static_cast<std::size_t>(j)];
          out << row_label(i) << ',' << col_label(j) << ','
              << format_double(r(i, j)) << ',' << (same ? "true" : "false")
              << ',' << (same ? bi : -1) << '\n';
        }
      }
    }
  }
  return out.str();
}

std::string sim_report_json(const SimReport& report) {
  ordered_json j;
  j["config"] = sim_config_json(report.config);
  j["gcca"] = gcca_config_json(report.gcca);
  j["rho_c_pop"] = report.rho_c_pop;
  j["pct_sensitivity_1"] = report.pct_sensitivity_1;
  j["pct_specificity_1"] = report.pct_specificity_1;
  j["pct_both_1"] = report.pct_both_1;
  j["mean_sensitivity"] = report.mean_sensitivity;
  j["mean_specificity"] = report.mean_specificity;
  j["bias_sq"] = report.bias_sq;
  j["variance"] = report.variance;
  j["mse"] = report.mse;
  j["attrition"] = report.attrition;

  j["per_replicate"] = json::array();
  for (const auto& o : report.per_replicate) {
    ordered_json r;
    r["sensitivity"] = o.recovery.sensitivity;
    r["specificity"] = o.recovery.specificity;
    r["exact_both"] = o.recovery.exact_both;
    if (o.rho_hat) r["rho_hat"] = *o.rho_hat;
    if (o.lambda_star) r["lambda_star"] = *o.lambda_star;
    if (!o.error.empty()) r["error"] = o.error;
    j["per_replicate"].push_back(r);
  }
  return j.dump(2) + "\n";
}

std::string recovery_table_csv(const std::vector<SimReport>& reports) {
  std::ostringstream out;
  out << "setting,n,p,q,block_rows,block_cols,rho_lo,rho_hi,replicates,"
         "pct_sensitivity_1,mean_sensitivity,pct_specificity_1,"
         "mean_specificity,pct_both_1\n";
  for (const auto& r : reports) {
    const auto& c = r.config;
    out << '"' << setting_label(c) << '"' << ',' << c.n << ',' << c.p << ','
        << c.q << ',' << c.block_rows << ',' << c.block_cols << ','
        << format_double(c.rho_lo) << ',' << format_double(c.rho_hi) << ','
        << c.replicates << ',' << format_double(r.pct_sensitivity_1) << ','
        << format_double(r.mean_sensitivity) << ','
        << format_double(r.pct_specificity_1) << ','
        << format_double(r.mean_specificity) << ','
        << format_double(r.pct_both_1) << '\n';
  }
  return out.str();
}

std::string estimation_table_csv(const std::vector<SimReport>& reports) {
  std::ostringstream out;
  out << "setting,n,block_rows,block_cols,rho_lo,rho_hi,replicates,"
         "rho_c_pop,bias_sq,variance,mse,attrition\n";
  for (const auto& r : reports) {
    const auto& c = r.config;
    out << '"' << setting_label(c) << '"' << ',' << c.n << ',' << c.block_rows
        << ',' << c.block_cols << ',' << format_double(c.rho_lo) << ','
        << format_double(c.rho_hi) << ',' << c.replicates << ','
        << format_double(r.rho_c_pop) << ',' << format_double(r.bias_sq) << ','
        << format_double(r.variance) << ',' << format_double(r.mse) << ','
        << r.attrition << '\n';
  }
  return out.str();
}

std::string report_text_table(const SimReport& report) {
  std::ostringstream out;
  out << "study " << setting_label(report.config) << "  (replicates "
      << report.config.replicates << ", seed " << report.config.seed << ")\n";
  out << std::fixed;
  out << "  % sensitivity=1 : " << std::setw(6) << std::setprecision(1)
      << report.pct_sensitivity_1 << "   (mean " << std::setprecision(4)
      << report.mean_sensitivity << ")\n";
  out << "  % specificity=1 : " << std::setw(6) << std::setprecision(1)
      << report.pct_specificity_1 << "   (mean " << std::setprecision(4)
      << report.mean_specificity << ")\n";
  out << "  % both=1        : " << std::setw(6) << std::setprecision(1)
      << report.pct_both_1 << "\n";
  out << std::scientific << std::setprecision(3);
  out << "  rho_c (population) " << report.rho_c_pop << "\n";
  out << "  bias^2   " << report.bias_sq << "\n";
  out << "  variance " << report.variance << "\n";
  out << "  mse      " << report.mse << "\n";
  if (report.attrition > 0)
    out << "  attrition " << report.attrition << " replicate(s) without a fit\n";
  return out.str();
}

std::string convergence_json(const ConvergenceResult& result) {
  ordered_json j;
  j["slope"] = result.slope;
  j["points"] = json::array();
  for (const auto& p : result.points) {
    ordered_json e;
    e["n"] = p.n;
    e["rmse"] = p.rmse;
    e["mse"] = p.report.mse;
    e["bias_sq"] = p.report.bias_sq;
    e["variance"] = p.report.variance;
    e["pct_both_1"] = p.report.pct_both_1;
    j["points"].push_back(e);
  }
  return j.dump(2) + "\n";
}

std::string convergence_csv(const ConvergenceResult& result) {
  std::ostringstream out;
  out << "n,rmse,mse,bias_sq,variance,pct_both_1\n";
  for (const auto& p : result.points) {
    out << p.n << ',' << format_double(p.rmse) << ','
        << format_double(p.report.mse) << ',' << format_double(p.report.bias_sq)
        << ',' << format_double(p.report.variance) << ','
        << format_double(p.report.pct_both_1) << '\n';
  }
  out << "slope," << format_double(result.slope) << ",,,,\n";
  return out.str();
}

std::string truth_json(const PlantedTruth& truth) {
  ordered_json j;
  j["p"] = truth.p;
  j["q"] = truth.q;
  j["i_x"] = index_array(truth.i_x);
  j["i_y"] = index_array(truth.i_y);
  j["alpha"] = vector_array(truth.alpha);
  j["beta"] = vector_array(truth.beta);
  j["rho_c_pop"] = truth.rho_c_pop;
  return j.dump(2) + "\n";
}

}  // namespace gcca
