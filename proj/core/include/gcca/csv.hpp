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
#include <string>
#include <vector>

#include "gcca/types.hpp"

namespace gcca {

// Comma-separated, UTF-8, '.' decimal point, header row required (variable
// names), one data row per subject. NaN/Inf values are rejected.
RawMatrix read_matrix_csv(const std::filesystem::path& path);

// Writes with round-trip exact number formatting (shortest representation
// that parses back to the same double).
void write_matrix_csv(const std::filesystem::path& path, const Matrix& values,
                      const std::vector<std::string>& column_names);

// Shortest round-trip decimal form of a double (std::to_chars).
std::string format_double(double value);

void write_text_file(const std::filesystem::path& path,
                     const std::string& content);

}  // namespace gcca
