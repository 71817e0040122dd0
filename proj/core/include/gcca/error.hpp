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

#include <stdexcept>
#include <string>

namespace gcca {

// Error categories map to CLI exit codes: 1 = usage, 2 = data, 3 = model.
enum class ErrorCategory { usage = 1, data = 2, model = 3 };

class Error : public std::runtime_error {
 public:
  Error(ErrorCategory category, const std::string& what)
      : std::runtime_error(what), category_(category) {}
  ErrorCategory category() const noexcept { return category_; }

 private:
  ErrorCategory category_;
};

// Data errors: problems with the input matrices themselves.
struct TooFewRowsError : Error {
  explicit TooFewRowsError(const std::string& what)
      : Error(ErrorCategory::data, what) {}
};
struct NonFiniteError : Error {
  explicit NonFiniteError(const std::string& what)
      : Error(ErrorCategory::data, what) {}
};
struct ConstantColumnError : Error {
  explicit ConstantColumnError(const std::string& column_name)
      : Error(ErrorCategory::data,
              "column has zero variance: " + column_name),
        column(column_name) {}
  std::string column;
};
struct RowCountMismatchError : Error {
  explicit RowCountMismatchError(const std::string& what)
      : Error(ErrorCategory::data, what) {}
};
struct CsvParseError : Error {
  explicit CsvParseError(const std::string& what)
      : Error(ErrorCategory::data, what) {}
};

// Usage errors: invalid parameters or calls.
struct EpsilonOutOfRangeError : Error {
  explicit EpsilonOutOfRangeError(double eps)
      : Error(ErrorCategory::usage,
              "epsilon must lie strictly inside (0, 1), got " +
                  std::to_string(eps)) {}
};
struct EmptyIndexSetError : Error {
  explicit EmptyIndexSetError(const std::string& what)
      : Error(ErrorCategory::usage, what) {}
};
struct UniverseMismatchError : Error {
  explicit UniverseMismatchError(const std::string& what)
      : Error(ErrorCategory::usage, what) {}
};
struct InstanceTooLargeError : Error {
  explicit InstanceTooLargeError(const std::string& what)
      : Error(ErrorCategory::usage, what) {}
};
struct ConfigError : Error {
  explicit ConfigError(const std::string& what)
      : Error(ErrorCategory::usage, what) {}
};

// Model errors: the pipeline cannot produce a meaningful result.
struct DegenerateReferenceError : Error {
  explicit DegenerateReferenceError(const std::string& what)
      : Error(ErrorCategory::model, what) {}
};
struct NoValidCandidateError : Error {
  explicit NoValidCandidateError(const std::string& what)
      : Error(ErrorCategory::model, what) {}
};
struct SvdFailureError : Error {
  explicit SvdFailureError(const std::string& what)
      : Error(ErrorCategory::model, what) {}
};
struct ZeroDenominatorError : Error {
  explicit ZeroDenominatorError(const std::string& what)
      : Error(ErrorCategory::model, what) {}
};

}  // namespace gcca
