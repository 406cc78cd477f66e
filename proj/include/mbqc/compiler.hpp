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

// Circuit -> per-row program words, measurement angles and link schedule.
//
// Word placement for a pattern starting at absolute round t:
//   B masks for measurement j        word of round t+j
//   A masks for measurement j        word of round t+j-1 (s is registered a round early)
//   store bit before a U             word of round t-1 (omitted when t == 0)
//   CNOT commutation, both rows      word of round t-1 (omitted when t == 0)
//   constant term of the CNOT z_c    word of the pattern's constant round

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "mbqc/circuit.hpp"
#include "mbqc/patterns.hpp"

namespace mbqc {

struct PlacedGate {
  GateSpec gate;
  unsigned start = 0;
};

/// Circuit after padding: every row is covered by back-to-back patterns.
struct Schedule {
  unsigned n_rows = 0;
  unsigned total_rounds = 0;
  std::vector<PlacedGate> gates;  // in start order, row order within a start
};

/// Pads each layer so every row spans the layer's longest pattern; padding is
/// identity placed after the row's gate (or a whole-layer identity when idle).
Schedule layout(const Circuit& circuit);

struct VerticalLink {
  unsigned round = 0;
  unsigned upper_row = 0;
  friend bool operator==(const VerticalLink&, const VerticalLink&) = default;
};

struct ProgramImage {
  unsigned n_rows = 0;
  unsigned total_rounds = 0;
  std::vector<std::vector<std::uint16_t>> words;  // [row][round]
  std::vector<std::vector<double>> theta;         // [row][round]
  std::vector<std::vector<bit_t>> basis_select;   // [row][round], 1 = equatorial
  std::vector<VerticalLink> links;
  /// Last round is a computational-basis readout of the output column.
  bool final_z_column = false;

  /// Rounds that carry pattern measurements (excludes the readout round).
  unsigned pattern_rounds() const { return total_rounds - (final_z_column ? 1U : 0U); }
  /// Throws ContractViolation if list shapes disagree with n_rows/total_rounds.
  void check_shape() const;
};

struct CompileOptions {
  bool final_z_column = false;
};

ProgramImage compile(const Circuit& circuit, const CompileOptions& options = {});
ProgramImage compile(const Schedule& schedule, const CompileOptions& options = {});

/// "qubit <i>" header per row, then one lowercase 4-digit hex word per line.
std::string emit_rom(const ProgramImage& image);
/// Inverse of emit_rom; returns words[row][round]. Throws ParseError.
std::vector<std::vector<std::uint16_t>> parse_rom(std::string_view text);

/// Whitespace-separated table: round, theta_<row>..., z_<row>...
std::string emit_theta_table(const ProgramImage& image);

/// Trace file replaying the controller over the image. Without outcomes every
/// m is 0; with them, outcomes[row][round] must cover every round.
std::string emit_trace_stimulus(const ProgramImage& image,
                                const std::optional<std::vector<std::vector<bit_t>>>& outcomes = {},
                                std::uint64_t seed = 0);

}  // namespace mbqc
