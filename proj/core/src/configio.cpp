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

#include "gcca/configio.hpp"

#include <json.hpp>

#include <charconv>
#include <fstream>
#include <map>
#include <sstream>

#include "gcca/error.hpp"

namespace gcca {

namespace {

using nlohmann::json;

// Minimal flat TOML subset: [section] headers, `key = value` lines where a
// value is a number, a bare boolean, a double-quoted string, or an array of
// numbers. Comments start with '#'. That covers every shipped config.
json parse_flat_toml(std::istream& in, const std::string& origin) {
  json root = json::object();
  json* section = &root;
  std::string line;
  int line_no = 0;

  auto fail = [&](const std::string& why) -> json {
    throw ConfigError(origin + ":" + std::to_string(line_no) + ": " + why);
  };

  auto trim = [](std::string s) {
    const auto b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos) return std::string();
    const auto e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
  };

  auto parse_scalar = [&](const std::string& token) -> json {
    if (token == "true") return true;
    if (token == "false") return false;
    if (token.size() >= 2 && token.front() == '"' && token.back() == '"')
      return token.substr(1, token.size() - 2);
    // integer first, then float
    {
      long long v = 0;
      auto [p, ec] =
          std::from_chars(token.data(), token.data() + token.size(), v);
      if (ec == std::errc() && p == token.data() + token.size()) return v;
    }
    double d = 0.0;
    auto [p, ec] =
        std::from_chars(token.data(), token.data() + token.size(), d);
    if (ec == std::errc() && p == token.data() + token.size()) return d;
    return fail("cannot parse value '" + token + "'");
  };

  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    if (line.front() == '[') {
      if (line.back() != ']') fail("unterminated section header");
      const std::string name = trim(line.substr(1, line.size() - 2));
      if (name.empty()) fail("empty section name");
      section = &root[name];
      if (section->is_null()) *section = json::object();
      continue;
    }

    const auto eq = line.find('=');
    if (eq == std::string::npos) fail("expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) fail("empty key");

    if (!value.empty() && value.front() == '[') {
      if (value.back() != ']') fail("unterminated array");
      json arr = json::array();
      std::string body = value.substr(1, value.size() - 2);
      std::stringstream parts(body);
      std::string item;
      while (std::getline(parts, item, ',')) {
        item = trim(item);
        if (!item.empty()) arr.push_back(parse_scalar(item));
      }
      (*section)[key] = arr;
    } else {
      (*section)[key] = parse_scalar(value);
    }
  }
  return root;
}

template <typename T>
void read_field(const json& obj, const char* key, T& into, bool required,
                const std::string& where) {
  if (!obj.contains(key)) {
    if (required)
      throw ConfigError(where + ": missing required key '" + key + "'");
    return;
  }
  try {
    into = obj.at(key).get<T>();
  } catch (const json::exception& e) {
    throw ConfigError(where + ": bad value for '" + key + "': " + e.what());
  }
}

}  // namespace

StudyConfig load_study_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path.string());

  json root;
  const std::string ext = path.extension().string();
  if (ext == ".json") {
    try {
      in >> root;
    } catch (const json::exception& e) {
      throw ConfigError(path.string() + ": " + e.what());
    }
  } else if (ext == ".toml") {
    root = parse_flat_toml(in, path.string());
  } else {
    throw ConfigError("unsupported config extension '" + ext +
                      "' (use .toml or .json)");
  }

  if (!root.contains("sim"))
    throw ConfigError(path.string() + ": missing [sim] section");

  StudyConfig cfg;
  const std::string where = path.string();
  const json& sim = root.at("sim");
  read_field(sim, "n", cfg.sim.n, true, where);
  read_field(sim, "p", cfg.sim.p, true, where);
  read_field(sim, "q", cfg.sim.q, true, where);
  read_field(sim, "block_rows", cfg.sim.block_rows, true, where);
  read_field(sim, "block_cols", cfg.sim.block_cols, true, where);
  read_field(sim, "rho_lo", cfg.sim.rho_lo, true, where);
  read_field(sim, "rho_hi", cfg.sim.rho_hi, true, where);
  read_field(sim, "seed", cfg.sim.seed, true, where);
  read_field(sim, "replicates", cfg.sim.replicates, true, where);
  cfg.sim.validate();

  if (root.contains("gcca")) {
    const json& g = root.at("gcca");
    read_field(g, "epsilon", cfg.gcca.epsilon, false, where);
    read_field(g, "lambda_grid", cfg.gcca.lambda_grid, false, where);
    read_field(g, "max_subgraphs", cfg.gcca.max_subgraphs, false, where);
    if (g.contains("min_block_mean")) {
      double v = 0.0;
      read_field(g, "min_block_mean", v, false, where);
      cfg.gcca.min_block_mean = v;
    }
    cfg.gcca.validate();
  }

  if (root.contains("convergence")) {
    const json& c = root.at("convergence");
    read_field(c, "n_values", cfg.convergence_n, false, where);
  }
  return cfg;
}

}  // namespace gcca
