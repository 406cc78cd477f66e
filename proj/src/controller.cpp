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

#include "mbqc/controller.hpp"

#include <string>

#include "mbqc/error.hpp"

namespace mbqc {

std::uint16_t ProgramWord::encode() const {
  if (c > 0x1F || a_b > 0x3 || a_m > 0x7 || b_x > 0x7 || b_z > 0x7) {
    throw ContractViolation("program word field overflow");
  }
  return static_cast<std::uint16_t>((c << 11) | (a_b << 9) | (a_m << 6) | (b_x << 3) | b_z);
}

ProgramWord ProgramWord::decode(std::uint16_t raw) {
  ProgramWord w;
  w.c = static_cast<std::uint8_t>((raw >> 11) & 0x1F);
  w.a_b = static_cast<std::uint8_t>((raw >> 9) & 0x3);
  w.a_m = static_cast<std::uint8_t>((raw >> 6) & 0x7);
  w.b_x = static_cast<std::uint8_t>((raw >> 3) & 0x7);
  w.b_z = static_cast<std::uint8_t>(raw & 0x7);
  return w;
}

void on_xp(ControllerState& state, std::uint16_t word, bool strict) {
  if (strict && state.latched && !state.sampled) {
    throw InvalidProgram("X_p twice without an intervening X_s");
  }
  state.latched = ProgramWord::decode(word);
  state.sampled = false;
}

void on_xs(ControllerState& state, bit_t m, NeighbourOutcomes nb, bool strict) {
  if (!state.latched) {
    if (strict) throw InvalidProgram("X_s without a latched program word");
    state.latched = ProgramWord{};
  }
  const ProgramWord& w = *state.latched;
  m &= 1;
  state.shift = {m, state.shift[0], state.shift[1]};

  auto select = [&](std::uint8_t mask) {
    bit_t v = 0;
    if (mask & masks::kAbove) v ^= nb.above & 1;
    if (mask & masks::kCurrent) v ^= m;
    if (mask & masks::kBelow) v ^= nb.below & 1;
    return v;
  };
  state.byproduct.x ^= select(w.b_x);
  state.byproduct.z ^= select(w.b_z);

  bit_t s = 0;
  for (unsigned i = 0; i < 3; ++i) {
    if (w.selects_m(i)) s ^= state.shift[i];
  }
  if (w.a_b & masks::kSelectX) s ^= state.stored.x;
  if (w.a_b & masks::kSelectZ) s ^= state.stored.z;
  state.s_out = s;
  state.sampled = true;
}

void on_xr(std::span<ControllerState> rows, bool strict) {
  const std::vector<ControllerState> snapshot(rows.begin(), rows.end());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    ControllerState& st = rows[r];
    if (strict && !st.sampled) {
      throw InvalidProgram("X_r without X_s on row " + std::to_string(r));
    }
    if (!st.latched) continue;
    const std::uint8_t c = st.latched->c;
    if ((c & cbits::kCommute) && (c & cbits::kConstants)) {
      throw InvalidProgram("row " + std::to_string(r) +
                           ": commutation and constant bits are mutually exclusive");
    }
    if (c & cbits::kCommute) {
      const bool above = c & cbits::kAboveOrX;
      if ((above && r == 0) || (!above && r + 1 >= rows.size())) {
        throw InvalidProgram("row " + std::to_string(r) + ": CNOT partner row out of range");
      }
      const ControllerState& partner = snapshot[above ? r - 1 : r + 1];
      if (c & cbits::kControlOrZ) {
        st.byproduct.z ^= partner.byproduct.z;
      } else {
        st.byproduct.x ^= partner.byproduct.x;
      }
    }
    if (c & cbits::kConstants) {
      if (c & cbits::kControlOrZ) st.byproduct.z ^= 1;
      if (c & cbits::kAboveOrX) st.byproduct.x ^= 1;
    }
    if (c & cbits::kStore) st.stored = st.byproduct;
  }
}

ControllerArray::ControllerArray(unsigned n_rows, bool strict) : rows_(n_rows), strict_(strict) {}

std::vector<bit_t> ControllerArray::current_s() const {
  std::vector<bit_t> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.s_out);
  return out;
}

std::vector<ByproductPair> ControllerArray::byproducts() const {
  std::vector<ByproductPair> out;
  out.reserve(rows_.size());
  for (const auto& r : rows_) out.push_back(r.byproduct);
  return out;
}

void ControllerArray::reset() {
  for (auto& r : rows_) r.reset();
}

std::vector<RowSnapshot> ControllerArray::step_round(std::span<const std::uint16_t> words,
                                                     std::span<const bit_t> outcomes) {
  const std::size_t n = rows_.size();
  if (words.size() != n || outcomes.size() != n) {
    throw ContractViolation("step_round: expected " + std::to_string(n) + " words and outcomes, got " +
                            std::to_string(words.size()) + " and " + std::to_string(outcomes.size()));
  }
  for (std::size_t r = 0; r < n; ++r) on_xp(rows_[r], words[r], strict_);
  for (std::size_t r = 0; r < n; ++r) {
    NeighbourOutcomes nb;
    if (r > 0) nb.above = outcomes[r - 1];
    if (r + 1 < n) nb.below = outcomes[r + 1];
    on_xs(rows_[r], outcomes[r], nb, strict_);
  }
  std::vector<RowSnapshot> snaps(n);
  for (std::size_t r = 0; r < n; ++r) {
    snaps[r] = {rows_[r].s_out, rows_[r].byproduct, rows_[r].stored};
  }
  on_xr(rows_, strict_);
  return snaps;
}

ReplayResult replay(const std::vector<std::vector<std::uint16_t>>& words,
                    const std::vector<std::vector<bit_t>>& outcomes, bool strict) {
  const std::size_t n = words.size();
  if (outcomes.size() != n) throw ContractViolation("replay: row count mismatch");
  const std::size_t rounds = n ? words[0].size() : 0;
  for (std::size_t r = 0; r < n; ++r) {
    if (words[r].size() != rounds || outcomes[r].size() != rounds) {
      throw ContractViolation("replay: row " + std::to_string(r) + " has a different round count");
    }
  }
  ControllerArray array(static_cast<unsigned>(n), strict);
  ReplayResult out;
  out.snapshots.assign(n, std::vector<RowSnapshot>(rounds));
  std::vector<std::uint16_t> wcol(n);
  std::vector<bit_t> mcol(n);
  for (std::size_t k = 0; k < rounds; ++k) {
    for (std::size_t r = 0; r < n; ++r) {
      wcol[r] = words[r][k];
      mcol[r] = outcomes[r][k];
    }
    const auto snaps = array.step_round(wcol, mcol);
    for (std::size_t r = 0; r < n; ++r) out.snapshots[r][k] = snaps[r];
  }
  out.final_byproducts = array.byproducts();
  return out;
}

}  // namespace mbqc
