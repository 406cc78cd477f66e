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

// Line-oriented circuit IR:
//
//   qubits 2
//   u 0 0.1 0.2 0.3        # U = R_x(zeta) R_z(eta) R_x(xi) on row 0
//   id 1 4
//   layer                  # starts the next layer
//   cnot 0 1
//
// '#' starts a comment. A layer need not mention every row; rows it leaves
// out are idle and get identity padding at layout time.

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "mbqc/patterns.hpp"

namespace mbqc {

struct Circuit {
  unsigned n_rows = 0;
  std::vector<std::vector<GateSpec>> layers;

  /// Throws ContractViolation on out-of-range rows, a row used twice in a
  /// layer, or an invalid gate.
  void validate() const;
  /// Appends a gate to the last layer (opening one if needed).
  Circuit& add(const GateSpec& gate);
  Circuit& new_layer();
};

/// Throws ParseError with the 1-based line and column of the offending token.
Circuit parse_circuit(std::string_view text);
Circuit read_circuit_file(const std::string& path);
std::string to_text(const Circuit& circuit);

}  // namespace mbqc
