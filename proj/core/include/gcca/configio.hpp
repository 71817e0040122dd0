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

#pragma once

#include <filesystem>
#include <vector>

#include "gcca/estimation.hpp"
#include "gcca/synthgen.hpp"

namespace gcca {

// A study configuration file: the [sim] table is required, [gcca] and the
// [convergence] n list are optional. Accepted formats, chosen by extension:
//   .toml: flat key/value tables ([section], key = value, arrays of numbers)
//   .json: the same structure as nested objects
struct StudyConfig {
  SimConfig sim;
  GccaConfig gcca;            // defaults where the file is silent
  std::vector<Index> convergence_n;  // empty unless configured
};

StudyConfig load_study_config(const std::filesystem::path& path);

}  // namespace gcca
