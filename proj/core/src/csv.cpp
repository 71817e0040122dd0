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

#include "gcca/csv.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "gcca/error.hpp"

namespace gcca {

namespace {

std::vector<std::string> split_line(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  for (;;) {
    const std::size_t comma = line.find(',', start);
    if (comma == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

std::string strip(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r')) ++b;
  while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r'))
    --e;
  return s.substr(b, e - b);
}

double parse_double(const std::string& field, const std::string& where) {
  const std::string tok = strip(field);
  if (tok.empty())
    throw CsvParseError("empty numeric field at " + where);
  double value = 0.0;
  const char* first = tok.data();
  const char* last = tok.data() + tok.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last)
    throw CsvParseError("cannot parse '" + tok + "' at " + where);
  if (!std::isfinite(value))
    throw NonFiniteError("non-finite value '" + tok + "' at " + where);
  return value;
}

}  // namespace

std::string format_double(double value) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  (void)ec;
  return std::string(buf, ptr);
}

RawMatrix read_matrix_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw CsvParseError("cannot open " + path.string());

  std::string line;
  if (!std::getline(in, line))
    throw CsvParseError("missing header row in " + path.string());
  if (!line.empty() && line.front() == '\xEF' && line.size() >= 3)
    line.erase(0, 3);  // UTF-8 BOM

  RawMatrix raw;
  for (const auto& name : split_line(line))
    raw.column_names.push_back(strip(name));
  const std::size_t width = raw.column_names.size();
  if (width == 0 ||
      (width == 1 && raw.column_names.front().empty()))
    throw CsvParseError("empty header row in " + path.string());

  std::vector<double> data;
  std::size_t rows = 0;
  while (std::getline(in, line)) {
    if (strip(line).empty()) continue;  // ignore trailing blank lines
    const auto fields = split_line(line);
    if (fields.size() != width)
      throw CsvParseError(path.string() + ": row " + std::to_string(rows + 2) +
                          " has " + std::to_string(fields.size()) +
                          " fields, header has " + std::to_string(width));
    for (std::size_t j = 0; j < width; ++j) {
      data.push_back(parse_double(
          fields[j], path.string() + ":" + std::to_string(rows + 2) +
                         " column " + raw.column_names[j]));
    }
    ++rows;
  }

  raw.values.resize(static_cast<Index>(rows), static_cast<Index>(width));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < width; ++j)
      raw.values(static_cast<Index>(i), static_cast<Index>(j)) =
          data[i * width + j];
  return raw;
}

void write_matrix_csv(const std::filesystem::path& path, const Matrix& values,
                      const std::vector<std::string>& column_names) {
  std::ostringstream out;
  for (Index j = 0; j < values.cols(); ++j) {
    if (j > 0) out << ',';
    const auto idx = static_cast<std::size_t>(j);
    out << (idx < column_names.size() ? column_names[idx]
                                      : "v" + std::to_string(j));
  }
  out << '\n';
  for (Index i = 0; i < values.rows(); ++i) {
    for (Index j = 0; j < values.cols(); ++j) {
      if (j > 0) out << ',';
      out << format_double(values(i, j));
    }
    out << '\n';
  }
  write_text_file(path, out.str());
}

void write_text_file(const std::filesystem::path& path,
                     const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw CsvParseError("cannot write " + path.string());
  out << content;
  if (!out) throw CsvParseError("write failed: " + path.string());
}

}  // namespace gcca
