// Copyright 2026 The mbqc-control Authors
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

#include <cstddef>
#include <stdexcept>
#include <string>

namespace mbqc {

/// Allocation would exceed the configured amplitude cap.
class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A documented precondition or postcondition did not hold.
class ContractViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// Numerically degenerate state (e.g. zero norm on both measurement branches).
class InternalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A forced measurement outcome has (numerically) zero probability.
class ImpossibleBranch : public std::runtime_error {
 public:
  ImpossibleBranch(const std::string& what, double probability)
      : std::runtime_error(what), probability_(probability) {}
  double probability() const { return probability_; }

 private:
  double probability_;
};

/// Program word stream that the controller cannot execute.
class InvalidProgram : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Text-format parse failure; line is 1-based, column 0 when unknown.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line, std::size_t column = 0)
      : std::runtime_error(format(what, line, column)), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  static std::string format(const std::string& what, std::size_t line, std::size_t column) {
    std::string out = "line " + std::to_string(line);
    if (column != 0) out += ", column " + std::to_string(column);
    return out + ": " + what;
  }
  std::size_t line_;
  std::size_t column_;
};

/// Timing budget cannot be met (logic alone consumes the period).
class InfeasibleBudget : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

}  // namespace mbqc
