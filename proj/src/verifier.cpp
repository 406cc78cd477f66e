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

#include "mbqc/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <random>

#include "mbqc/error.hpp"

namespace mbqc::verifier {

ClusterGraph::ClusterGraph(unsigned n_vertices) : n_(n_vertices) {
  for (unsigned v = 0; v < n_; ++v) {
    labels_.push_back(v == kR ? "R" : v == kS ? "S" : std::to_string(v));
  }
}

unsigned ClusterGraph::index_of(std::string_view label) const {
  for (unsigned v = 0; v < n_; ++v) {
    if (labels_[v] == label) return v;
  }
  throw ContractViolation("unknown vertex '" + std::string(label) + "'");
}

void ClusterGraph::add_edge(unsigned a, unsigned b) {
  if (a >= n_ || b >= n_) throw ContractViolation("edge endpoint out of range");
  if (a == b) throw ContractViolation("self-loop on vertex " + labels_[a]);
  if (has_edge(a, b)) throw ContractViolation("repeated edge " + labels_[a] + "-" + labels_[b]);
  edges_.emplace_back(std::min(a, b), std::max(a, b));
}

bool ClusterGraph::has_edge(unsigned a, unsigned b) const {
  const std::pair<unsigned, unsigned> e{std::min(a, b), std::max(a, b)};
  return std::find(edges_.begin(), edges_.end(), e) != edges_.end();
}

std::vector<unsigned> ClusterGraph::neighbours(unsigned v) const {
  if (v >= n_) throw ContractViolation("unknown vertex " + std::to_string(v));
  std::vector<unsigned> out;
  for (const auto& [a, b] : edges_) {
    if (a == v) out.push_back(b);
    if (b == v) out.push_back(a);
  }
  std::sort(out.begin(), out.end());
  return out;
}

ClusterGraph chain_graph(unsigned n_vertices) {
  ClusterGraph g(n_vertices);
  for (unsigned v = 0; v + 1 < n_vertices; ++v) g.add_edge(v, v + 1);
  return g;
}

ClusterGraph cnot_graph(unsigned vertical_column) {
  if (vertical_column > 6) throw ContractViolation("vertical column must be in 0..6");
  ClusterGraph g(kCnotVertices);
  const unsigned top[] = {0, 1, 2, 3, 4, 5, kR};
  const unsigned bottom[] = {6, 7, 8, 9, 10, 11, kS};
  for (unsigned c = 0; c < 6; ++c) {
    g.add_edge(top[c], top[c + 1]);
    g.add_edge(bottom[c], bottom[c + 1]);
  }
  g.add_edge(top[vertical_column], bottom[vertical_column]);
  return g;
}

StateVector build_cluster(const ClusterGraph& graph, const std::optional<StateVector>& input) {
  const unsigned n = graph.n_vertices();
  if (n > kMaxVertices) {
    throw ResourceError("cluster of " + std::to_string(n) + " vertices exceeds the cap of " +
                        std::to_string(kMaxVertices));
  }
  StateVector psi = new_plus_state(n);
  if (input) {
    if (input->n_qubits() != 2) throw ContractViolation("cluster input must be a 2-qubit state");
    if (n < 7) throw ContractViolation("cluster input needs vertices 0 and 6");
    const double a = std::pow(2.0, -0.5 * (n - 2));
    std::vector<amp_t> amps(std::size_t{1} << n);
    for (std::size_t i = 0; i < amps.size(); ++i) {
      amps[i] = (*input)[(i & 1U) | (((i >> 6) & 1U) << 1)] * a;
    }
    psi = StateVector::from_amplitudes(std::move(amps));
  }
  for (const auto& [a, b] : graph.edges()) psi.apply_cz(a, b);
  return psi;
}

PauliString correlation_operator(const ClusterGraph& graph, unsigned a) {
  PauliString k(graph.n_vertices());
  k.set(a, Pauli::X);
  for (unsigned b : graph.neighbours(a)) k.set(b, Pauli::Z);
  return k;
}

namespace {

PauliString letters(std::initializer_list<std::pair<unsigned, Pauli>> ls, int sign = 1) {
  PauliString p(kCnotVertices);
  for (const auto& [q, l] : ls) p.set(q, l);
  p.set_phase_exponent(sign < 0 ? 2 : 0);
  return p;
}

constexpr Pauli X = Pauli::X;
constexpr Pauli Y = Pauli::Y;
constexpr Pauli Z = Pauli::Z;

}  // namespace

std::vector<CorrelEquation> correl_equations() {
  return {
      {"E1", {0, 2, 3, 4, kR, 10, kS},
       letters({{0, X}, {2, Y}, {3, X}, {4, Y}, {kR, X}, {10, X}, {kS, X}}, -1)},
      {"E2", {1, 2, 4, 5}, letters({{0, Z}, {1, Y}, {2, Y}, {4, Y}, {5, Y}, {kR, Z}})},
      {"E3", {6, 8, 10, kS}, letters({{6, X}, {8, X}, {10, X}, {kS, X}})},
      {"E4", {4, 5, 7, 9, 11},
       letters({{4, Y}, {5, Y}, {kR, Z}, {6, Z}, {7, X}, {9, X}, {11, X}, {kS, Z}})},
  };
}

bool EigenReport::all_pass() const {
  return std::all_of(equations.begin(), equations.end(), [](const EquationResult& e) { return e.pass; });
}

EigenReport check_correl_products(const ClusterGraph& graph) {
  if (graph.n_vertices() != kCnotVertices) {
    throw ContractViolation("product equations are defined on the 14-vertex CNOT cluster");
  }
  const StateVector psi = build_cluster(graph);
  EigenReport rep;
  for (unsigned v = 0; v < graph.n_vertices(); ++v) {
    rep.single_expectations.push_back(psi.expectation(correlation_operator(graph, v)));
  }
  for (const CorrelEquation& eq : correl_equations()) {
    EquationResult r;
    r.name = eq.name;
    r.product = PauliString(graph.n_vertices());
    for (unsigned a : eq.factors) r.product *= correlation_operator(graph, a);
    r.expected = eq.expected;
    r.symbolic_match = r.product == r.expected;
    r.expectation = psi.expectation(r.expected);
    r.pass = r.symbolic_match && std::abs(r.expectation - 1.0) < 1e-10;
    rep.equations.push_back(std::move(r));
  }
  return rep;
}

std::vector<unsigned> uniqueness_probe() {
  std::vector<unsigned> passing;
  for (unsigned c = 0; c <= 6; ++c) {
    if (check_correl_products(cnot_graph(c)).all_pass()) passing.push_back(c);
  }
  return passing;
}

double measurement_angle(unsigned vertex) {
  switch (vertex) {
    case 1: case 2: case 4: case 5: return std::numbers::pi / 2;
    default: return 0.0;
  }
}

namespace {

std::array<bit_t, kMeasured> branch_bits(unsigned branch) {
  std::array<bit_t, kMeasured> m{};
  for (unsigned v = 0; v < kMeasured; ++v) m[v] = (branch >> v) & 1U;
  return m;
}

// Rotate every measured vertex so its outcome-m eigenstate becomes |m>.
void rotate_to_measurement_bases(StateVector& psi, unsigned first, unsigned last,
                                 const std::vector<unsigned>& skip = {}) {
  for (unsigned v = first; v <= last; ++v) {
    if (std::find(skip.begin(), skip.end(), v) != skip.end()) continue;
    psi.apply_rz(v, std::numbers::pi / 2 - measurement_angle(v));
    psi.apply_rx(v, std::numbers::pi / 2);
  }
}

void check_cnot_graph(const ClusterGraph& graph) {
  if (graph.n_vertices() != kCnotVertices) {
    throw ContractViolation("branch checks need the 14-vertex CNOT cluster");
  }
}

}  // namespace

StateVector project_branch(const ClusterGraph& graph, const StateVector& input, unsigned branch) {
  check_cnot_graph(graph);
  StateVector psi = build_cluster(graph, input);
  for (unsigned v = 0; v < kMeasured; ++v) {
    psi.project_in_equator(0, measurement_angle(v), (branch >> v) & 1U);
    psi.remove_qubit(0);
  }
  return psi;
}

StateVector expected_output(const StateVector& input, unsigned branch) {
  if (input.n_qubits() != 2) throw ContractViolation("expected_output: input must have 2 qubits");
  const auto m = branch_bits(branch);
  const auto [c, t] = patterns::cnot_byproduct({}, {}, std::span<const bit_t, 12>(m));
  StateVector out = input;
  out.apply_cnot(0, 1);
  if (c.x) out.apply_x(0);
  if (c.z) out.apply_z(0);
  if (t.x) out.apply_x(1);
  if (t.z) out.apply_z(1);
  return out;
}

BranchReport enumerate_branches(const StateVector& input, const BranchOptions& options,
                                const ClusterGraph& graph) {
  check_cnot_graph(graph);
  if (input.n_qubits() != 2) throw ContractViolation("enumerate_branches: input must have 2 qubits");

  std::vector<unsigned> branches(kBranches);
  std::iota(branches.begin(), branches.end(), 0U);
  if (options.sample != 0 && options.sample < kBranches) {
    std::vector<unsigned> picked;
    std::mt19937_64 engine(options.seed);
    std::sample(branches.begin(), branches.end(), std::back_inserter(picked), options.sample, engine);
    branches = std::move(picked);
  }

  StateVector psi = build_cluster(graph, input);
  rotate_to_measurement_bases(psi, 0, kMeasured - 1);
  const patterns::Pattern cnot = patterns::cnot_pattern();

  const long count = static_cast<long>(branches.size());
  std::vector<double> prob(branches.size(), 0.0);
  std::vector<double> fid(branches.size(), 1.0);
  std::vector<char> skipped(branches.size(), 0);
  std::vector<char> byproduct_ok(branches.size(), 0);
  std::exception_ptr error;

#pragma omp parallel for schedule(static)
  for (long i = 0; i < count; ++i) {
    try {
      const unsigned b = branches[i];
      std::vector<amp_t> out(4);
      double p = 0.0;
      for (unsigned rs = 0; rs < 4; ++rs) {
        out[rs] = psi[b | ((rs & 1U) << kR) | ((rs >> 1) << kS)];
        p += std::norm(out[rs]);
      }
      prob[i] = p;

      const auto m = branch_bits(b);
      const auto [c, t] = patterns::cnot_byproduct({}, {}, std::span<const bit_t, 12>(m));
      const std::vector<std::vector<bit_t>> rows = {{m.begin(), m.begin() + 6},
                                                    {m.begin() + 6, m.end()}};
      const std::vector<ByproductPair> zero(2);
      const auto rules = patterns::apply_byproduct_rules(cnot, zero, rows);
      byproduct_ok[i] = rules[0] == c && rules[1] == t;

      if (p < options.min_probability) {
        skipped[i] = 1;
        continue;
      }
      for (amp_t& a : out) a /= std::sqrt(p);
      fid[i] = fidelity_up_to_phase(StateVector::from_amplitudes(std::move(out)),
                                    expected_output(input, b));
    } catch (...) {
#pragma omp critical(mbqc_branch_error)
      if (!error) error = std::current_exception();
    }
  }
  if (error) std::rethrow_exception(error);

  BranchReport rep;
  rep.examined = static_cast<unsigned>(branches.size());
  for (std::size_t i = 0; i < branches.size(); ++i) {
    rep.total_probability += prob[i];
    rep.byproduct_pass += byproduct_ok[i] ? 1 : 0;
    if (skipped[i]) {
      ++rep.skipped;
      continue;
    }
    rep.min_fidelity = std::min(rep.min_fidelity, fid[i]);
    if (fid[i] >= 1.0 - 1e-9) {
      ++rep.fidelity_pass;
    } else {
      rep.failures.push_back(branches[i]);
    }
    if (!byproduct_ok[i]) rep.failures.push_back(branches[i]);
  }
  return rep;
}

std::array<int, 4> closed_form_signs(const std::array<bit_t, kMeasured>& m) {
  auto sign = [](unsigned parity) { return (parity & 1U) ? -1 : 1; };
  return {
      sign(1U + m[2] + m[3] + m[4] + m[10]),
      sign(0U + m[1] + m[2] + m[4] + m[5]),
      sign(0U + m[8] + m[10]),
      sign(0U + m[4] + m[5] + m[7] + m[9] + m[11]),
  };
}

SignReport check_eigen_signs(const ClusterGraph& graph) {
  check_cnot_graph(graph);
  StateVector psi = build_cluster(graph);
  rotate_to_measurement_bases(psi, 1, kMeasured - 1, {6});

  // Remaining qubits, in order: vertex 0, vertex 6, R, S.
  const std::array<PauliString, 4> observables = {
      PauliString::parse("X_XX"), PauliString::parse("Z_Z_"),
      PauliString::parse("_X_X"), PauliString::parse("_ZZZ")};
  std::vector<unsigned> internal = {1, 2, 3, 4, 5, 7, 8, 9, 10, 11};

  SignReport rep;
  for (unsigned code = 0; code < (1U << internal.size()); ++code) {
    std::array<bit_t, kMeasured> m{};
    std::size_t base = 0;
    for (unsigned j = 0; j < internal.size(); ++j) {
      m[internal[j]] = (code >> j) & 1U;
      base |= std::size_t{m[internal[j]]} << internal[j];
    }
    std::vector<amp_t> amps(16);
    double p = 0.0;
    for (unsigned k = 0; k < 16; ++k) {
      const std::size_t idx = base | (std::size_t{k & 1U}) | (std::size_t{(k >> 1) & 1U} << 6) |
                              (std::size_t{(k >> 2) & 1U} << kR) | (std::size_t{(k >> 3) & 1U} << kS);
      amps[k] = psi[idx];
      p += std::norm(amps[k]);
    }
    if (p < 1e-12) continue;
    for (amp_t& a : amps) a /= std::sqrt(p);
    const StateVector out = StateVector::from_amplitudes(std::move(amps));
    const auto want = closed_form_signs(m);
    bool ok = true;
    for (unsigned e = 0; e < 4; ++e) {
      const double got = out.expectation(observables[e]);
      rep.max_deviation = std::max(rep.max_deviation, std::abs(std::abs(got) - 1.0));
      if (std::abs(got - want[e]) > 1e-9) ok = false;
    }
    ++rep.branches;
    if (!ok) ++rep.mismatches;
  }
  return rep;
}

}  // namespace mbqc::verifier
