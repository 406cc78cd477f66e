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

#include "mbqc/circuit.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mbqc/error.hpp"

namespace mbqc {

void Circuit::validate() const {
  for (std::size_t l = 0; l < layers.size(); ++l) {
    std::vector<bool> used(n_rows, false);
    for (const GateSpec& g : layers[l]) {
      mbqc::validate(g);
      for (unsigned r : rows_of(g)) {
        if (r >= n_rows) {
          throw ContractViolation("layer " + std::to_string(l) + ": row " + std::to_string(r) +
                                  " out of range for " + std::to_string(n_rows) + " rows");
        }
        if (used[r]) {
          throw ContractViolation("layer " + std::to_string(l) + ": row " + std::to_string(r) +
                                  " used twice");
        }
        used[r] = true;
      }
    }
  }
}

Circuit& Circuit::add(const GateSpec& gate) {
  if (layers.empty()) layers.emplace_back();
  layers.back().push_back(gate);
  return *this;
}

Circuit& Circuit::new_layer() {
  layers.emplace_back();
  return *this;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r' && line[i] != '#') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

unsigned parse_unsigned(const Token& t, std::size_t line) {
  unsigned v = 0;
  auto [p, ec] = std::from_chars(t.text.data(), t.text.data() + t.text.size(), v);
  if (ec != std::errc{} || p != t.text.data() + t.text.size()) {
    throw ParseError("expected a non-negative integer, got '" + std::string(t.text) + "'", line,
                     t.column);
  }
  return v;
}

double parse_angle(const Token& t, std::size_t line) {
  // from_chars<double> is missing from older libstdc++; strtod on a copy instead.
  const std::string s(t.text);
  char* end = nullptr;
  const double v = std::strtod(s.c_str(), &end);
  if (s.empty() || end != s.c_str() + s.size() || !std::isfinite(v)) {
    throw ParseError("expected a finite angle, got '" + s + "'", line, t.column);
  }
  return v;
}

void expect_arity(const std::vector<Token>& tok, std::size_t n, std::size_t line) {
  if (tok.size() != n) {
    const std::size_t col = tok.size() > n ? tok[n].column : tok.back().column;
    throw ParseError("'" + std::string(tok[0].text) + "' takes " + std::to_string(n - 1) +
                         " arguments, got " + std::to_string(tok.size() - 1),
                     line, col);
  }
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
  Circuit c;
  bool have_header = false;
  std::vector<bool> used;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const std::size_t nl = text.find('\n', pos);
    const std::string_view line =
        text.substr(pos, nl == std::string_view::npos ? std::string_view::npos : nl - pos);
    pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;
    const auto tok = tokenize(line);
    if (tok.empty()) continue;
    const std::string_view kw = tok[0].text;

    if (kw == "qubits") {
      if (have_header) throw ParseError("duplicate 'qubits' line", line_no, tok[0].column);
      expect_arity(tok, 2, line_no);
      c.n_rows = parse_unsigned(tok[1], line_no);
      if (c.n_rows == 0) throw ParseError("circuit needs at least one qubit", line_no, tok[1].column);
      used.assign(c.n_rows, false);
      have_header = true;
      continue;
    }
    if (!have_header) throw ParseError("expected 'qubits N' first", line_no, tok[0].column);

    if (kw == "layer") {
      expect_arity(tok, 1, line_no);
      if (!c.layers.empty() && !c.layers.back().empty()) c.new_layer();
      used.assign(c.n_rows, false);
      continue;
    }

    GateSpec gate;
    if (kw == "u") {
      expect_arity(tok, 5, line_no);
      gate = OneQubitGate{parse_angle(tok[2], line_no), parse_angle(tok[3], line_no),
                          parse_angle(tok[4], line_no), parse_unsigned(tok[1], line_no)};
    } else if (kw == "cnot") {
      expect_arity(tok, 3, line_no);
      gate = CnotGate{parse_unsigned(tok[1], line_no), parse_unsigned(tok[2], line_no)};
    } else if (kw == "id") {
      expect_arity(tok, 3, line_no);
      gate = IdentityGate{parse_unsigned(tok[1], line_no), parse_unsigned(tok[2], line_no)};
    } else {
      throw ParseError("unknown keyword '" + std::string(kw) + "'", line_no, tok[0].column);
    }

    try {
      validate(gate);
    } catch (const ContractViolation& e) {
      throw ParseError(e.what(), line_no, tok[1].column);
    }
    for (unsigned r : rows_of(gate)) {
      if (r >= c.n_rows) {
        throw ParseError("row " + std::to_string(r) + " out of range for " +
                             std::to_string(c.n_rows) + " qubits",
                         line_no, tok[1].column);
      }
      if (used[r]) {
        throw ParseError("row " + std::to_string(r) + " already used in this layer", line_no,
                         tok[1].column);
      }
      used[r] = true;
    }
    c.add(gate);
  }
  if (!have_header) throw ParseError("missing 'qubits N' line", line_no == 0 ? 1 : line_no);
  if (!c.layers.empty() && c.layers.back().empty()) c.layers.pop_back();
  return c;
}

Circuit read_circuit_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open circuit file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_circuit(ss.str());
}

std::string to_text(const Circuit& circuit) {
  std::ostringstream out;
  out.precision(17);
  out << "qubits " << circuit.n_rows << '\n';
  for (std::size_t l = 0; l < circuit.layers.size(); ++l) {
    if (l > 0) out << "layer\n";
    for (const GateSpec& g : circuit.layers[l]) {
      if (const auto* u = std::get_if<OneQubitGate>(&g)) {
        out << "u " << u->row << ' ' << u->xi << ' ' << u->eta << ' ' << u->zeta << '\n';
      } else if (const auto* cx = std::get_if<CnotGate>(&g)) {
        out << "cnot " << cx->control << ' ' << cx->target << '\n';
      } else {
        const auto& id = std::get<IdentityGate>(g);
        out << "id " << id.row << ' ' << id.length << '\n';
      }
    }
  }
  return out.str();
}

}  // namespace mbqc
