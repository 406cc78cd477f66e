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

#include "mbqc/simulator.hpp"

#include <cmath>
#include <exception>
#include <string>

#include "mbqc/controller.hpp"
#include "mbqc/error.hpp"

namespace mbqc {

namespace {

void check_forced(const std::vector<std::vector<bit_t>>& forced, const ProgramImage& image) {
  if (forced.size() != image.n_rows) {
    throw ContractViolation("forced outcomes have " + std::to_string(forced.size()) +
                            " rows, program has " + std::to_string(image.n_rows));
  }
  for (std::size_t r = 0; r < forced.size(); ++r) {
    if (forced[r].size() != image.total_rounds) {
      throw ContractViolation("forced outcomes for row " + std::to_string(r) + " have " +
                              std::to_string(forced[r].size()) + " rounds, program has " +
                              std::to_string(image.total_rounds));
    }
  }
}

}  // namespace

RunResult run_mbqc(const ProgramImage& image, std::uint64_t seed,
                   const std::optional<std::vector<std::vector<bit_t>>>& forced,
                   const SimOptions& options) {
  image.check_shape();
  const unsigned n = image.n_rows;
  if (n == 0) throw ContractViolation("run_mbqc: program has no rows");
  if (forced) check_forced(*forced, image);

  RunResult res;
  res.trace.header = {n, seed, image.total_rounds, kRngName};
  StateVector psi = new_plus_state(n, options.max_amplitudes);
  ControllerArray ctl(n, options.strict_controller);
  Rng rng(seed);
  res.max_live_qubits = n;

  std::vector<std::uint16_t> wcol(n);
  std::vector<bit_t> mcol(n);
  auto record = [&](unsigned k, const std::vector<RowSnapshot>& snaps) {
    for (unsigned r = 0; r < n; ++r) {
      res.trace.records.push_back(
          {k, r, mcol[r], wcol[r], image.theta[r][k], snaps[r].s, snaps[r].b, snaps[r].sb});
    }
  };
  auto measure = [&](unsigned q, unsigned row, unsigned k, double phi, bool equatorial) -> bit_t {
    if (forced) {
      const int m = (*forced)[row][k];
      if (equatorial) {
        psi.project_in_equator(q, phi, m, options.min_branch_probability);
      } else {
        psi.project_z(q, m, options.min_branch_probability);
      }
      return static_cast<bit_t>(m);
    }
    return static_cast<bit_t>(equatorial ? psi.measure_in_equator(q, phi, rng.draw())
                                         : psi.measure_z(q, rng.draw()));
  };

  std::size_t link = 0;
  const unsigned rounds = image.pattern_rounds();
  for (unsigned k = 0; k < rounds; ++k) {
    psi.append_plus_qubits(n);
    res.max_live_qubits = std::max<std::size_t>(res.max_live_qubits, psi.n_qubits());
    for (unsigned r = 0; r < n; ++r) psi.apply_cz(r, n + r);
    for (; link < image.links.size() && image.links[link].round == k; ++link) {
      psi.apply_cz(image.links[link].upper_row, image.links[link].upper_row + 1);
    }
    const std::vector<bit_t> s_prev = ctl.current_s();
    for (unsigned r = 0; r < n; ++r) {
      const double theta = image.theta[r][k];
      const double phi = s_prev[r] ? -theta : theta;
      wcol[r] = image.words[r][k];
      mcol[r] = measure(r, r, k, phi, image.basis_select[r][k] != 0);
    }
    res.max_norm_error = std::max(res.max_norm_error, std::abs(1.0 - psi.norm_squared()));
    record(k, ctl.step_round(wcol, mcol));
    for (unsigned r = 0; r < n; ++r) psi.remove_qubit(0);
  }

  res.byproducts = ctl.byproducts();
  res.final_state = psi;
  res.corrected_state = correct_final_state(psi, res.byproducts);

  if (image.final_z_column) {
    const unsigned k = image.total_rounds - 1;
    for (unsigned r = 0; r < n; ++r) {
      wcol[r] = image.words[r][k];
      mcol[r] = measure(r, r, k, 0.0, image.basis_select[r][k] != 0);
    }
    res.max_norm_error = std::max(res.max_norm_error, std::abs(1.0 - psi.norm_squared()));
    record(k, ctl.step_round(wcol, mcol));
    res.raw_readout = mcol;
    res.readout.resize(n);
    for (unsigned r = 0; r < n; ++r) res.readout[r] = mcol[r] ^ res.byproducts[r].x;
  }
  return res;
}

StateVector run_gate_model(const Circuit& circuit, std::size_t max_amplitudes) {
  circuit.validate();
  StateVector psi = new_plus_state(circuit.n_rows, max_amplitudes);
  for (const auto& layer : circuit.layers) {
    for (const GateSpec& g : layer) {
      if (const auto* u = std::get_if<OneQubitGate>(&g)) {
        psi.apply_rx(u->row, u->xi);
        psi.apply_rz(u->row, u->eta);
        psi.apply_rx(u->row, u->zeta);
      } else if (const auto* c = std::get_if<CnotGate>(&g)) {
        psi.apply_cnot(c->control, c->target);
      }
    }
  }
  return psi;
}

StateVector correct_final_state(StateVector state, const std::vector<ByproductPair>& byproducts) {
  if (byproducts.size() != state.n_qubits()) {
    throw ContractViolation("correct_final_state: " + std::to_string(byproducts.size()) +
                            " byproducts for " + std::to_string(state.n_qubits()) + " qubits");
  }
  for (unsigned r = 0; r < byproducts.size(); ++r) {
    if (byproducts[r].x) state.apply_x(r);
    if (byproducts[r].z) state.apply_z(r);
  }
  return state;
}

std::vector<bit_t> corrected_readout(StateVector state, const std::vector<ByproductPair>& byproducts,
                                     std::uint64_t seed) {
  if (byproducts.size() != state.n_qubits()) {
    throw ContractViolation("corrected_readout: byproduct count does not match qubit count");
  }
  Rng rng(seed);
  std::vector<bit_t> out(byproducts.size());
  for (unsigned r = 0; r < out.size(); ++r) {
    out[r] = static_cast<bit_t>(state.measure_z(r, rng.draw()) ^ byproducts[r].x);
  }
  return out;
}

EquivalenceReport verify_equivalence(const Circuit& circuit, const std::vector<std::uint64_t>& seeds,
                                     const SimOptions& options) {
  const ProgramImage image = compile(circuit);
  const StateVector reference = run_gate_model(circuit, options.max_amplitudes);
  EquivalenceReport rep;
  rep.seeds = seeds;
  rep.fidelities.assign(seeds.size(), 0.0);
  std::exception_ptr error;
  const long count = static_cast<long>(seeds.size());
#pragma omp parallel for schedule(dynamic)
  for (long i = 0; i < count; ++i) {
    try {
      const RunResult run = run_mbqc(image, seeds[i], std::nullopt, options);
      rep.fidelities[i] = fidelity_up_to_phase(run.corrected_state, reference);
    } catch (...) {
#pragma omp critical(mbqc_equivalence_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);
  for (std::size_t i = 0; i < seeds.size(); ++i) {
    if (i == 0 || rep.fidelities[i] < rep.min_fidelity) {
      rep.min_fidelity = rep.fidelities[i];
      rep.worst_seed = seeds[i];
    }
  }
  return rep;
}

}  // namespace mbqc
