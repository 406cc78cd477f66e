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

#include "mbqc/compiler.hpp"

#include <algorithm>
#include <cstdio>
#include <string>

#include "mbqc/controller.hpp"
#include "mbqc/error.hpp"
#include "mbqc/trace.hpp"

namespace mbqc {

Schedule layout(const Circuit& circuit) {
  circuit.validate();
  Schedule out;
  out.n_rows = circuit.n_rows;
  unsigned t = 0;
  for (const auto& layer : circuit.layers) {
    if (layer.empty()) continue;
    unsigned len = 0;
    for (const GateSpec& g : layer) len = std::max(len, pattern_length(g));
    std::vector<bool> covered(circuit.n_rows, false);
    std::vector<PlacedGate> pads;
    for (const GateSpec& g : layer) {
      out.gates.push_back({g, t});
      const unsigned residue = len - pattern_length(g);
      if (residue % 2 != 0) throw ContractViolation("layer cannot be padded: odd residue");
      for (unsigned r : rows_of(g)) {
        covered[r] = true;
        if (residue > 0) pads.push_back({IdentityGate{r, residue}, t + pattern_length(g)});
      }
    }
    for (unsigned r = 0; r < circuit.n_rows; ++r) {
      if (!covered[r]) out.gates.push_back({IdentityGate{r, len}, t});
    }
    out.gates.insert(out.gates.end(), pads.begin(), pads.end());
    t += len;
  }
  out.total_rounds = t;
  std::stable_sort(out.gates.begin(), out.gates.end(), [](const PlacedGate& a, const PlacedGate& b) {
    if (a.start != b.start) return a.start < b.start;
    return rows_of(a.gate).front() < rows_of(b.gate).front();
  });
  return out;
}

void ProgramImage::check_shape() const {
  auto check = [&](const auto& m, const char* name) {
    if (m.size() != n_rows) throw ContractViolation(std::string(name) + ": wrong row count");
    for (const auto& row : m) {
      if (row.size() != total_rounds) throw ContractViolation(std::string(name) + ": wrong round count");
    }
  };
  check(words, "words");
  check(theta, "theta");
  check(basis_select, "basis_select");
  for (const VerticalLink& l : links) {
    if (l.round >= total_rounds || l.upper_row + 1 >= n_rows) {
      throw ContractViolation("vertical link out of range");
    }
  }
}

namespace {

// Absolute rows of the pattern's local rows. CNOT local row 0 is the control.
std::vector<unsigned> local_rows(const GateSpec& g) {
  if (const auto* c = std::get_if<CnotGate>(&g)) return {c->control, c->target};
  return rows_of(g);
}

std::uint8_t position_bit(unsigned source_row, unsigned dest_row) {
  if (source_row == dest_row) return masks::kCurrent;
  if (source_row + 1 == dest_row) return masks::kAbove;
  if (source_row == dest_row + 1) return masks::kBelow;
  throw InternalError("byproduct source is not a neighbour row");
}

void set_once(std::uint8_t& field, std::uint8_t bit, const char* what) {
  if (field & bit) throw InternalError(std::string("duplicate ") + what + " mask bit");
  field |= bit;
}

}  // namespace

ProgramImage compile(const Schedule& schedule, const CompileOptions& options) {
  const unsigned n = schedule.n_rows;
  const unsigned rounds = schedule.total_rounds + (options.final_z_column ? 1U : 0U);
  std::vector<std::vector<ProgramWord>> w(n, std::vector<ProgramWord>(rounds));
  ProgramImage img;
  img.n_rows = n;
  img.total_rounds = rounds;
  img.final_z_column = options.final_z_column;
  img.theta.assign(n, std::vector<double>(rounds, 0.0));
  img.basis_select.assign(n, std::vector<bit_t>(rounds, 1));
  if (options.final_z_column) {
    for (unsigned r = 0; r < n; ++r) img.basis_select[r][rounds - 1] = 0;
  }

  for (const PlacedGate& pg : schedule.gates) {
    const patterns::Pattern p = patterns::pattern_for(pg.gate);
    patterns::check_causality(p);
    const std::vector<unsigned> rows = local_rows(pg.gate);
    const unsigned t = pg.start;
    if (t + p.length > schedule.total_rounds) throw ContractViolation("gate runs past the schedule");

    for (unsigned lr = 0; lr < p.rows; ++lr) {
      const unsigned row = rows[lr];
      for (unsigned j = 0; j < p.length; ++j) img.theta[row][t + j] = p.theta[lr][j];

      auto lower = [&](const patterns::ByproductRule& rule, bool is_x) {
        for (const patterns::MeasurementRef& src : rule.sources) {
          ProgramWord& word = w[row][t + src.round];
          set_once(is_x ? word.b_x : word.b_z, position_bit(rows[src.row], row), "B");
        }
        if (rule.constant) {
          ProgramWord& word = w[row][t + rule.constant_round];
          word.c |= cbits::kConstants | (is_x ? cbits::kAboveOrX : cbits::kControlOrZ);
        }
      };
      lower(p.byproduct[lr].x, true);
      lower(p.byproduct[lr].z, false);

      for (unsigned j = 0; j < p.length; ++j) {
        const patterns::AdaptiveRule& rule = p.adaptive[lr][j];
        if (rule.empty()) continue;
        if (j == 0) throw ContractViolation(p.name + ": first measurement cannot be adaptive");
        ProgramWord& word = w[row][t + j - 1];
        for (unsigned src : rule.sources) {
          const unsigned slot = (j - 1) - src;
          if (slot > 2) throw ContractViolation(p.name + ": adaptive source beyond the shift register");
          set_once(word.a_m, ProgramWord::a_m_slot(slot), "A_m");
        }
        if (rule.use_x) word.a_b |= masks::kSelectX;
        if (rule.use_z) word.a_b |= masks::kSelectZ;
      }
    }

    for (unsigned j : p.vertical_links) {
      img.links.push_back({t + j, std::min(rows[0], rows[1])});
    }

    if (t > 0) {
      switch (p.pre_action) {
        case patterns::PreGateAction::none:
          break;
        case patterns::PreGateAction::store_byproducts:
          w[rows[0]][t - 1].c |= cbits::kStore;
          break;
        case patterns::PreGateAction::cnot_commutation: {
          const unsigned control = rows[0];
          const unsigned target = rows[1];
          const bool target_below = target > control;
          w[control][t - 1].c |= cbits::kCommute | cbits::kControlOrZ |
                                 (target_below ? 0 : cbits::kAboveOrX);
          w[target][t - 1].c |= cbits::kCommute | (target_below ? cbits::kAboveOrX : 0);
          break;
        }
      }
    }
  }

  img.words.assign(n, std::vector<std::uint16_t>(rounds));
  for (unsigned r = 0; r < n; ++r) {
    for (unsigned k = 0; k < rounds; ++k) {
      const ProgramWord& word = w[r][k];
      if ((word.c & cbits::kCommute) && (word.c & cbits::kConstants)) {
        throw InvalidProgram("row " + std::to_string(r) + ", round " + std::to_string(k) +
                             ": commutation and constant insertion collide");
      }
      img.words[r][k] = word.encode();
    }
  }
  std::sort(img.links.begin(), img.links.end(), [](const VerticalLink& a, const VerticalLink& b) {
    return a.round != b.round ? a.round < b.round : a.upper_row < b.upper_row;
  });
  img.check_shape();
  return img;
}

ProgramImage compile(const Circuit& circuit, const CompileOptions& options) {
  return compile(layout(circuit), options);
}

std::string emit_rom(const ProgramImage& image) {
  std::string out;
  char buf[8];
  for (unsigned r = 0; r < image.n_rows; ++r) {
    out += "qubit " + std::to_string(r) + "\n";
    for (std::uint16_t word : image.words[r]) {
      std::snprintf(buf, sizeof buf, "%04x\n", static_cast<unsigned>(word));
      out += buf;
    }
  }
  return out;
}

std::vector<std::vector<std::uint16_t>> parse_rom(std::string_view text) {
  std::vector<std::vector<std::uint16_t>> rows;
  std::size_t pos = 0;
  std::size_t line_no = 0;
  while (pos < text.size()) {
    const std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, (nl == std::string_view::npos ? text.size() : nl) - pos);
    pos = nl == std::string_view::npos ? text.size() : nl + 1;
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (line.starts_with("qubit ")) {
      const std::string idx(line.substr(6));
      if (idx != std::to_string(rows.size())) {
        throw ParseError("expected 'qubit " + std::to_string(rows.size()) + "'", line_no);
      }
      rows.emplace_back();
      continue;
    }
    if (rows.empty()) throw ParseError("word before any 'qubit' header", line_no);
    if (line.size() != 4 || line.find_first_not_of("0123456789abcdef") != std::string_view::npos) {
      throw ParseError("expected 4 lowercase hex digits, got '" + std::string(line) + "'", line_no);
    }
    rows.back().push_back(static_cast<std::uint16_t>(std::stoul(std::string(line), nullptr, 16)));
  }
  for (const auto& r : rows) {
    if (r.size() != rows.front().size()) throw ParseError("rows have different lengths", line_no);
  }
  return rows;
}

std::string emit_theta_table(const ProgramImage& image) {
  std::string out = "round";
  for (unsigned r = 0; r < image.n_rows; ++r) out += "\ttheta_" + std::to_string(r);
  for (unsigned r = 0; r < image.n_rows; ++r) out += "\tz_" + std::to_string(r);
  out += '\n';
  char buf[32];
  for (unsigned k = 0; k < image.total_rounds; ++k) {
    out += std::to_string(k);
    for (unsigned r = 0; r < image.n_rows; ++r) {
      std::snprintf(buf, sizeof buf, "\t%.6f", image.theta[r][k]);
      out += buf;
    }
    for (unsigned r = 0; r < image.n_rows; ++r) {
      out += '\t';
      out += static_cast<char>('0' + image.basis_select[r][k]);
    }
    out += '\n';
  }
  return out;
}

std::string emit_trace_stimulus(const ProgramImage& image,
                                const std::optional<std::vector<std::vector<bit_t>>>& outcomes,
                                std::uint64_t seed) {
  image.check_shape();
  std::vector<std::vector<bit_t>> m =
      outcomes ? *outcomes
               : std::vector<std::vector<bit_t>>(image.n_rows, std::vector<bit_t>(image.total_rounds, 0));
  const ReplayResult rep = replay(image.words, m);
  Trace t;
  t.header = {image.n_rows, seed, image.total_rounds, kRngName};
  for (unsigned k = 0; k < image.total_rounds; ++k) {
    for (unsigned r = 0; r < image.n_rows; ++r) {
      const RowSnapshot& s = rep.snapshots[r][k];
      t.records.push_back({k, r, m[r][k], image.words[r][k], image.theta[r][k], s.s, s.b, s.sb});
    }
  }
  return write_trace(t);
}

}  // namespace mbqc
