// Copyright 2026 The q2sat-adiabatic Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace q2sat {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Invalid argument or violated precondition.
class ParameterError : public Error {
 public:
  using Error::Error;
};

/// Malformed instance file. `field()` and `line()` locate the offending value
/// (line is 1-based, 0 when unknown).
class ParseError : public Error {
 public:
  ParseError(std::string field, int line, const std::string& what)
      : Error(format(field, line, what)), field_(std::move(field)), line_(line) {}

  const std::string& field() const noexcept { return field_; }
  int line() const noexcept { return line_; }

 private:
  static std::string format(const std::string& field, int line,
                            const std::string& what) {
    std::string msg = "parse error";
    if (!field.empty()) msg += " in field '" + field + "'";
    if (line > 0) msg += " at line " + std::to_string(line);
    return msg + ": " + what;
  }

  std::string field_;
  int line_;
};

/// Iterative method failed to converge, or an integrator diagnostic tripped.
class NumericalError : public Error {
 public:
  explicit NumericalError(const std::string& what,
                          std::vector<double> residuals = {})
      : Error(what), residuals_(std::move(residuals)) {}

  const std::vector<double>& residuals() const noexcept { return residuals_; }

 private:
  std::vector<double> residuals_;
};

class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace q2sat
