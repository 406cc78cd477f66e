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

// Functional model of the per-row control unit. Each round runs three clock
// events in order:
//   X_p  latch the program word
//   X_s  shift the new outcome into the register, XOR it (and the neighbours'
//        outcomes) into the byproduct, register the adaptive output s
//   X_r  boundary actions selected by the C field
// The s registered in round k sets the sign of the measurement in round k+1.

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mbqc/patterns.hpp"

namespace mbqc {

/// 16-bit program word, packed as C[15:11] A_b[10:9] A_m[8:6] B_x[5:3] B_z[2:0].
struct ProgramWord {
  std::uint8_t c = 0;    // 5 bits
  std::uint8_t a_b = 0;  // 2 bits: bit 1 selects x_s, bit 0 selects z_s
  std::uint8_t a_m = 0;  // 3 bits: field MSB selects m_0 (most recent)
  std::uint8_t b_x = 0;  // 3 bits: above, current, below (MSB first)
  std::uint8_t b_z = 0;  // 3 bits

  /// Throws ContractViolation if any field overflows its width.
  std::uint16_t encode() const;
  static ProgramWord decode(std::uint16_t raw);

  /// A_m slot i (0 = most recent outcome).
  bool selects_m(unsigned i) const { return (a_m >> (2 - i)) & 1U; }
  static std::uint8_t a_m_slot(unsigned i) { return static_cast<std::uint8_t>(1U << (2 - i)); }

  friend bool operator==(const ProgramWord&, const ProgramWord&) = default;
};

namespace cbits {
inline constexpr std::uint8_t kStore = 1U << 0;
inline constexpr std::uint8_t kCommute = 1U << 1;
/// With kCommute: this row is the control. With kConstants: XOR 1 into z.
inline constexpr std::uint8_t kControlOrZ = 1U << 2;
/// With kCommute: the partner is the row above. With kConstants: XOR 1 into x.
inline constexpr std::uint8_t kAboveOrX = 1U << 3;
inline constexpr std::uint8_t kConstants = 1U << 4;
}  // namespace cbits

namespace masks {
inline constexpr std::uint8_t kAbove = 0b100;
inline constexpr std::uint8_t kCurrent = 0b010;
inline constexpr std::uint8_t kBelow = 0b001;
inline constexpr std::uint8_t kSelectX = 0b10;
inline constexpr std::uint8_t kSelectZ = 0b01;
}  // namespace masks

/// Outcomes visible to a row at X_s. Rows above 0 or below N-1 read as 0.
struct NeighbourOutcomes {
  bit_t above = 0;
  bit_t below = 0;
};

struct ControllerState {
  std::array<bit_t, 3> shift{};  // shift[0] = m_0, the most recent outcome
  ByproductPair byproduct;
  ByproductPair stored;
  bit_t s_out = 0;
  std::optional<ProgramWord> latched;
  bool sampled = false;  // X_s seen since the last X_p

  void reset() { *this = ControllerState{}; }
};

void on_xp(ControllerState& state, std::uint16_t word, bool strict = false);
void on_xs(ControllerState& state, bit_t m, NeighbourOutcomes neighbours, bool strict = false);
/// X_r for every row. Partner registers are read from a snapshot taken before
/// any row changes, so row order does not matter. Throws InvalidProgram when
/// C bits 1 and 4 are both set or the partner row does not exist.
void on_xr(std::span<ControllerState> rows, bool strict = false);

/// Per-row values visible after X_s of a round (before X_r).
struct RowSnapshot {
  bit_t s = 0;
  ByproductPair b;
  ByproductPair sb;
};

class ControllerArray {
 public:
  explicit ControllerArray(unsigned n_rows, bool strict = false);

  unsigned n_rows() const { return static_cast<unsigned>(rows_.size()); }
  const ControllerState& row(unsigned r) const { return rows_.at(r); }
  std::span<const ControllerState> rows() const { return rows_; }
  /// s registered in the previous round (0 after reset), per row.
  std::vector<bit_t> current_s() const;
  std::vector<ByproductPair> byproducts() const;
  void reset();

  /// X_p, X_s and X_r for every row. Returns the pre-X_r snapshot per row;
  /// its s is the setting for the next round.
  std::vector<RowSnapshot> step_round(std::span<const std::uint16_t> words,
                                      std::span<const bit_t> outcomes);

 private:
  std::vector<ControllerState> rows_;
  bool strict_;
};

/// Pure replay of a word matrix against an outcome matrix, both [row][round].
struct ReplayResult {
  std::vector<std::vector<RowSnapshot>> snapshots;  // [row][round]
  std::vector<ByproductPair> final_byproducts;
};
ReplayResult replay(const std::vector<std::vector<std::uint16_t>>& words,
                    const std::vector<std::vector<bit_t>>& outcomes, bool strict = false);

}  // namespace mbqc
