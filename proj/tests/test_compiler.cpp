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

#include <doctest.h>

#include <random>
#include <sstream>
#include <tuple>
#include <string>
#include <vector>

#include "circuits.hpp"
#include "mbqc/compiler.hpp"
#include "mbqc/controller.hpp"
#include "mbqc/error.hpp"
#include "mbqc/trace.hpp"
#include "oracles.hpp"

using namespace mbqc;
using testing_support::random_circuit;
using testing_support::golden_circuit;

namespace {

std::vector<unsigned> local_rows(const GateSpec& g) {
  if (const auto* c = std::get_if<CnotGate>(&g)) return {c->control, c->target};
  return rows_of(g);
}

// Walks the schedule through the pattern rules and checks the controller's
// replay of the compiled words against it: every registered s, and the
// byproducts at the end of every pattern.
void check_against_rules(const Circuit& circuit, std::mt19937_64& g) {
  const Schedule sched = layout(circuit);
  const ProgramImage img = compile(sched);
  std::vector<std::vector<bit_t>> m(img.n_rows, std::vector<bit_t>(img.total_rounds));
  for (auto& row : m)
    for (auto& b : row) b = g() & 1U;
  const ReplayResult rep = replay(img.words, m, true);

  std::vector<std::vector<bit_t>> want_s(img.n_rows, std::vector<bit_t>(img.total_rounds, 0));
  std::vector<ByproductPair> b(img.n_rows), stored(img.n_rows);
  for (const PlacedGate& pg : sched.gates) {
    const patterns::Pattern p = patterns::pattern_for(pg.gate);
    const auto rows = local_rows(pg.gate);
    const unsigned t = pg.start;
    if (p.pre_action == patterns::PreGateAction::store_byproducts) stored[rows[0]] = b[rows[0]];
    if (p.pre_action == patterns::PreGateAction::cnot_commutation) {
      std::tie(b[rows[0]], b[rows[1]]) = patterns::cnot_commutation(b[rows[0]], b[rows[1]]);
    }
    std::vector<std::vector<bit_t>> local(p.rows);
    std::vector<ByproductPair> before;
    for (unsigned lr = 0; lr < p.rows; ++lr) {
      local[lr].assign(m[rows[lr]].begin() + t, m[rows[lr]].begin() + t + p.length);
      before.push_back(b[rows[lr]]);
    }
    for (unsigned lr = 0; lr < p.rows; ++lr) {
      for (unsigned j = 1; j < p.length; ++j) {
        want_s[rows[lr]][t + j - 1] = patterns::adaptive_setting(p, lr, j, local[lr], stored[rows[lr]]);
      }
    }
    const auto after = patterns::apply_byproduct_rules(p, before, local);
    for (unsigned lr = 0; lr < p.rows; ++lr) {
      b[rows[lr]] = after[lr];
      REQUIRE(rep.snapshots[rows[lr]][t + p.length - 1].b == after[lr]);
    }
  }
  for (unsigned r = 0; r < img.n_rows; ++r) {
    for (unsigned k = 0; k < img.total_rounds; ++k) REQUIRE(rep.snapshots[r][k].s == want_s[r][k]);
    REQUIRE(rep.final_byproducts[r] == b[r]);
  }
}

}  // namespace

TEST_SUITE("compiler") {
  TEST_CASE("golden circuit compiles to the reference words") {
    const ProgramImage img = compile(golden_circuit());
    REQUIRE(img.n_rows == 2);
    REQUIRE(img.total_rounds == 10);
    for (int r = 0; r < 2; ++r) {
      for (int k = 0; k < 10; ++k) {
        CAPTURE(r);
        CAPTURE(k);
        CHECK(img.words[r][k] == oracle::golden()[r].word[k]);
      }
    }
    for (int k = 0; k < 10; ++k) {
      CHECK(img.theta[0][k] == doctest::Approx(oracle::golden_theta_row0()[k]).epsilon(1e-15));
      CHECK(img.theta[1][k] == 0.0);
      CHECK(img.basis_select[0][k] == 1);
      CHECK(img.basis_select[1][k] == 1);
    }
    CHECK(img.links == std::vector<VerticalLink>{{7, 0}});
  }

  TEST_CASE("golden circuit from the IR file") {
    const Circuit c = read_circuit_file(MBQC_TEST_DATA_DIR "/golden.circuit");
    CHECK(compile(c).words == compile(golden_circuit()).words);
  }

  TEST_CASE("layout pads with identities") {
    Schedule s = layout(golden_circuit());
    REQUIRE(s.gates.size() == 3);
    CHECK(s.total_rounds == 10);

    Circuit c;
    c.n_rows = 3;
    c.add(CnotGate{0, 1});
    s = layout(c);
    REQUIRE(s.gates.size() == 2);
    const auto& id = std::get<IdentityGate>(s.gates[1].gate);
    CHECK(id.row == 2);
    CHECK(id.length == 6);
    CHECK(s.gates[1].start == 0);

    Circuit d;
    d.n_rows = 3;
    d.add(OneQubitGate{0.1, 0.2, 0.3, 0}).add(CnotGate{2, 1});
    s = layout(d);
    REQUIRE(s.gates.size() == 3);
    const auto& pad = std::get<IdentityGate>(s.gates[2].gate);
    CHECK(pad.row == 0);
    CHECK(pad.length == 2);
    CHECK(s.gates[2].start == 4);

    Circuit single;
    single.n_rows = 1;
    single.add(OneQubitGate{0.3, 0.2, 0.1, 0});
    s = layout(single);
    REQUIRE(s.gates.size() == 1);
    CHECK(s.total_rounds == 4);
  }

  TEST_CASE("empty circuit") {
    Circuit c;
    c.n_rows = 2;
    const ProgramImage img = compile(c);
    CHECK(img.total_rounds == 0);
    CHECK(img.words == std::vector<std::vector<std::uint16_t>>(2));
    CHECK(emit_rom(img) == "qubit 0\nqubit 1\n");
    CHECK(parse_rom(emit_rom(img)) == img.words);
  }

  TEST_CASE("final Z column") {
    const ProgramImage img = compile(golden_circuit(), {.final_z_column = true});
    CHECK(img.total_rounds == 11);
    CHECK(img.pattern_rounds() == 10);
    for (unsigned r = 0; r < 2; ++r) {
      CHECK(img.basis_select[r][10] == 0);
      CHECK(img.words[r][10] == 0);
      for (unsigned k = 0; k < 10; ++k) CHECK(img.words[r][k] == oracle::golden()[r].word[k]);
    }
  }

  TEST_CASE("compile is deterministic") {
    std::mt19937_64 g(5);
    for (int i = 0; i < 20; ++i) {
      const Circuit c = random_circuit(g);
      CHECK(emit_rom(compile(c)) == emit_rom(compile(c)));
      CHECK(emit_theta_table(compile(c)) == emit_theta_table(compile(c)));
    }
  }

  TEST_CASE("compiled words realise the pattern rules") {
    std::mt19937_64 g(6);
    check_against_rules(golden_circuit(), g);
    for (int i = 0; i < 100; ++i) {
      const Circuit c = random_circuit(g);
      CAPTURE(to_text(c));
      for (int rep = 0; rep < 4; ++rep) check_against_rules(c, g);
    }
  }

  TEST_CASE("A masks only reference earlier outcomes of the same pattern") {
    std::mt19937_64 g(7);
    for (int i = 0; i < 100; ++i) {
      const Circuit c = random_circuit(g);
      const Schedule s = layout(c);
      const ProgramImage img = compile(s);
      // Start round of the pattern owning each (row, round).
      std::vector<std::vector<unsigned>> owner(img.n_rows, std::vector<unsigned>(img.total_rounds));
      std::vector<std::vector<bool>> in_cnot(img.n_rows, std::vector<bool>(img.total_rounds));
      for (const PlacedGate& pg : s.gates) {
        for (unsigned r : rows_of(pg.gate)) {
          for (unsigned k = pg.start; k < pg.start + pattern_length(pg.gate); ++k) {
            owner[r][k] = pg.start;
            in_cnot[r][k] = std::holds_alternative<CnotGate>(pg.gate);
          }
        }
      }
      for (unsigned r = 0; r < img.n_rows; ++r) {
        for (unsigned k = 0; k < img.total_rounds; ++k) {
          const ProgramWord w = ProgramWord::decode(img.words[r][k]);
          if (w.a_m == 0 && w.a_b == 0) continue;
          // These masks set s for the measurement at k + 1.
          REQUIRE(k + 1 < img.total_rounds);
          REQUIRE(owner[r][k + 1] == owner[r][k]);
          REQUIRE_FALSE(in_cnot[r][k + 1]);
          for (unsigned slot = 0; slot < 3; ++slot) {
            if (w.selects_m(slot)) {
              REQUIRE(k >= slot);
              REQUIRE(k - slot >= owner[r][k + 1]);
            }
          }
        }
      }
    }
  }

  TEST_CASE("CNOT words carry no adaptive masks") {
    const ProgramImage img = compile(golden_circuit());
    for (unsigned r = 0; r < 2; ++r) {
      for (unsigned k = 4; k < 10; ++k) {
        const ProgramWord w = ProgramWord::decode(img.words[r][k]);
        CHECK(w.a_m == 0);
        CHECK(w.a_b == 0);
      }
    }
  }

  TEST_CASE("ROM text") {
    const ProgramImage img = compile(golden_circuit());
    const std::string rom = emit_rom(img);
    std::istringstream in(rom);
    std::vector<std::string> lines;
    for (std::string l; std::getline(in, l);) lines.push_back(l);
    REQUIRE(lines.size() == 22);
    CHECK(lines[0] == "qubit 0");
    CHECK(lines[1] == "0302");
    CHECK(lines[7] == "a013");  // seventh word of the row-0 section
    CHECK(lines[11] == "qubit 1");
    CHECK(parse_rom(rom) == img.words);

    CHECK_THROWS_AS(parse_rom("0302\n"), ParseError);
    CHECK_THROWS_AS(parse_rom("qubit 1\n0302\n"), ParseError);
    CHECK_THROWS_AS(parse_rom("qubit 0\n03G2\n"), ParseError);
    CHECK_THROWS_AS(parse_rom("qubit 0\nA013\n"), ParseError);
    CHECK_THROWS_AS(parse_rom("qubit 0\n0302\nqubit 1\n"), ParseError);
    try {
      parse_rom("qubit 0\n0302\n12345\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
    }
  }

  TEST_CASE("theta table") {
    const std::string t = emit_theta_table(compile(golden_circuit()));
    std::istringstream in(t);
    std::string header, first, seventh;
    std::getline(in, header);
    CHECK(header == "round\ttheta_0\ttheta_1\tz_0\tz_1");
    std::getline(in, first);
    CHECK(first == "0\t0.000000\t0.000000\t1\t1");
    for (int i = 0; i < 6; ++i) std::getline(in, seventh);
    CHECK(seventh == "6\t1.570796\t0.000000\t1\t1");
  }

  TEST_CASE("trace stimulus matches the golden rows") {
    const ProgramImage img = compile(golden_circuit());
    const auto m = parse_outcomes(read_text_file(MBQC_TEST_DATA_DIR "/golden.outcomes"));
    const Trace t = read_trace(emit_trace_stimulus(img, m, 0));
    REQUIRE(t.records.size() == 20);
    for (const TraceRecord& rec : t.records) {
      const auto& g = oracle::golden()[rec.row];
      CHECK(rec.word == g.word[rec.round]);
      CHECK(rec.m == g.m[rec.round]);
      CHECK(rec.s == g.s[rec.round]);
    }
    CHECK(read_trace(emit_trace_stimulus(img)).records.size() == 20);
  }

  TEST_CASE("circuit IR") {
    const Circuit c = parse_circuit("qubits 3\nu 0 0.1 0.2 0.3  # comment\ncnot 2 1\nlayer\nid 0 2\n");
    REQUIRE(c.layers.size() == 2);
    CHECK(parse_circuit(to_text(c)).layers.size() == 2);
    CHECK(to_text(parse_circuit(to_text(c))) == to_text(c));

    auto expect_error = [](const char* text, std::size_t line, std::size_t column) {
      try {
        parse_circuit(text);
        FAIL("expected ParseError for: " << text);
      } catch (const ParseError& e) {
        CHECK(e.line() == line);
        CHECK(e.column() == column);
      }
    };
    expect_error("u 0 1 2 3\n", 1, 1);
    expect_error("qubits 2\nfoo 1\n", 2, 1);
    expect_error("qubits 2\nu 0 1 2\n", 2, 7);
    expect_error("qubits 2\nu 5 1 2 3\n", 2, 3);
    expect_error("qubits 2\nu 0 1 2 3\nid 0 4\n", 3, 4);
    expect_error("qubits 2\nu 0 x 2 3\n", 2, 5);
    expect_error("qubits 0\n", 1, 8);
    CHECK_THROWS_AS(parse_circuit("qubits 3\ncnot 0 2\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit("qubits 2\nid 0 3\n"), ParseError);
    CHECK_THROWS_AS(parse_circuit(""), ParseError);
    CHECK_THROWS(read_circuit_file("/nonexistent/path.circuit"));

    Circuit bad;
    bad.n_rows = 2;
    bad.add(OneQubitGate{0, 0, 0, 0}).add(IdentityGate{0, 4});
    CHECK_THROWS_AS(bad.validate(), ContractViolation);
  }
}
