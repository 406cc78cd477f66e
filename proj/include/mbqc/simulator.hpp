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

// Column-streaming execution of a compiled program. Only two cluster columns
// are live at once: qubits 0..N-1 hold the column being measured, N..2N-1 the
// next one. The first column is the logical input |+>^N.

#include <cstdint>
#include <optional>
#include <random>
#include <vector>

#include "mbqc/circuit.hpp"
#include "mbqc/compiler.hpp"
#include "mbqc/quantum/state_vector.hpp"
#include "mbqc/trace.hpp"

namespace mbqc {

/// Seeded source of uniform draws in [0, 1): top 53 bits of mt19937_64.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  double draw() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

struct SimOptions {
  /// 2N qubits are live; the default admits N = 10.
  std::size_t max_amplitudes = std::size_t{1} << 20;
  bool strict_controller = true;
  /// Forced outcomes below this probability raise ImpossibleBranch.
  double min_branch_probability = 1e-12;
};

struct RunResult {
  Trace trace;
  /// Output column before byproduct correction.
  StateVector final_state{1};
  std::vector<ByproductPair> byproducts;
  StateVector corrected_state{1};
  /// Raw readout and x-corrected readout; filled only for a final Z column.
  std::vector<bit_t> raw_readout;
  std::vector<bit_t> readout;
  /// Largest per-round norm deviation |1 - <psi|psi>| seen after collapse.
  double max_norm_error = 0.0;
  std::size_t max_live_qubits = 0;
};

/// forced_outcomes[row][round] replaces the random draw with a projection.
RunResult run_mbqc(const ProgramImage& image, std::uint64_t seed,
                   const std::optional<std::vector<std::vector<bit_t>>>& forced_outcomes = {},
                   const SimOptions& options = {});

/// U layers as R_x(xi), then R_z(eta), then R_x(zeta); CNOTs as gates; on |+>^N.
StateVector run_gate_model(const Circuit& circuit,
                           std::size_t max_amplitudes = StateVector::kDefaultMaxAmplitudes);

/// Undoes B = prod Z^z X^x row by row: X^x, then Z^z.
StateVector correct_final_state(StateVector state, const std::vector<ByproductPair>& byproducts);

/// Z-measures every qubit with draws from Rng(seed); bit i is flipped iff x_i = 1.
std::vector<bit_t> corrected_readout(StateVector state, const std::vector<ByproductPair>& byproducts,
                                     std::uint64_t seed);

struct EquivalenceReport {
  std::vector<std::uint64_t> seeds;
  std::vector<double> fidelities;
  double min_fidelity = 1.0;
  std::uint64_t worst_seed = 0;
};

/// Compiles once, then runs every seed (in parallel) against the gate model.
EquivalenceReport verify_equivalence(const Circuit& circuit, const std::vector<std::uint64_t>& seeds,
                                     const SimOptions& options = {});

}  // namespace mbqc
