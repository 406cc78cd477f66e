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

// Stabilizer-level checks of the two-row CNOT pattern on its 14-qubit cluster.
//
// Vertex (= qubit) numbering: 0..5 control row, 6..11 target row, R = 12 and
// S = 13 the output qubits after 5 and 11. The CNOT graph is the two chains
// 0-1-2-3-4-5-R and 6-7-8-9-10-11-S plus one vertical edge, normally {3, 9}.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mbqc/patterns.hpp"
#include "mbqc/quantum/pauli_string.hpp"
#include "mbqc/quantum/state_vector.hpp"

namespace mbqc::verifier {

inline constexpr unsigned kR = 12;
inline constexpr unsigned kS = 13;
inline constexpr unsigned kCnotVertices = 14;
inline constexpr unsigned kMaxVertices = 14;
inline constexpr unsigned kMeasured = 12;
inline constexpr unsigned kBranches = 1U << kMeasured;

class ClusterGraph {
 public:
  /// Labels default to the vertex index, except 12 -> "R" and 13 -> "S".
  explicit ClusterGraph(unsigned n_vertices);

  unsigned n_vertices() const { return n_; }
  const std::vector<std::pair<unsigned, unsigned>>& edges() const { return edges_; }
  const std::string& label(unsigned v) const { return labels_.at(v); }
  /// Throws ContractViolation for unknown labels.
  unsigned index_of(std::string_view label) const;
  /// Throws ContractViolation for self-loops, out-of-range or repeated edges.
  void add_edge(unsigned a, unsigned b);
  bool has_edge(unsigned a, unsigned b) const;
  std::vector<unsigned> neighbours(unsigned v) const;

 private:
  unsigned n_;
  std::vector<std::string> labels_;
  std::vector<std::pair<unsigned, unsigned>> edges_;  // (min, max)
};

ClusterGraph chain_graph(unsigned n_vertices);
/// column 0..5 joins column-th qubits of both rows; column 6 joins R and S.
ClusterGraph cnot_graph(unsigned vertical_column = 3);

/// |+> on every vertex, CZ per edge. With input, vertices 0 and 6 start in the
/// given 2-qubit state (its qubit 0 on vertex 0). Throws ResourceError above
/// kMaxVertices.
StateVector build_cluster(const ClusterGraph& graph, const std::optional<StateVector>& input = {});

/// X_a times Z on every neighbour of a.
PauliString correlation_operator(const ClusterGraph& graph, unsigned a);

struct CorrelEquation {
  std::string name;
  std::vector<unsigned> factors;  // vertices a whose K_a are multiplied, left to right
  PauliString expected;           // the right-hand side, sign included
};
/// The four product equations the CNOT pattern is derived from.
std::vector<CorrelEquation> correl_equations();

struct EquationResult {
  std::string name;
  PauliString product;
  PauliString expected;
  bool symbolic_match = false;
  double expectation = 0.0;  // of `expected` on the cluster state
  bool pass = false;
};

struct EigenReport {
  std::vector<EquationResult> equations;
  /// <K_a> for every single vertex.
  std::vector<double> single_expectations;
  bool all_pass() const;
};

EigenReport check_correl_products(const ClusterGraph& graph = cnot_graph());

/// Vertical-edge columns (0..6) for which every product equation passes.
std::vector<unsigned> uniqueness_probe();

/// X for vertices 0, 3 and 6..11; Y for 1, 2, 4, 5.
double measurement_angle(unsigned vertex);

/// Output pair (qubit 0 = R, qubit 1 = S) after projecting vertices 0..11 onto
/// the outcome bits of `branch` (bit v = m_v). Literal projection, one vertex at
/// a time. Throws ImpossibleBranch for a zero-probability branch.
StateVector project_branch(const ClusterGraph& graph, const StateVector& input, unsigned branch);

/// B CNOT |input>, with B from the closed-form CNOT byproduct starting at zero.
StateVector expected_output(const StateVector& input, unsigned branch);

struct BranchOptions {
  /// 0 means every branch; otherwise a seeded sample of distinct branches.
  unsigned sample = 0;
  std::uint64_t seed = 0;
  double min_probability = 1e-12;
};

struct BranchReport {
  unsigned examined = 0;
  unsigned skipped = 0;  // zero probability
  unsigned fidelity_pass = 0;
  unsigned byproduct_pass = 0;
  double min_fidelity = 1.0;
  double total_probability = 0.0;
  std::vector<unsigned> failures;
  bool all_pass() const {
    return fidelity_pass + skipped == examined && byproduct_pass == examined;
  }
};

/// For each selected branch, compares the output pair with B CNOT |input> and
/// the pattern's byproduct rules with the closed-form equations.
BranchReport enumerate_branches(const StateVector& input, const BranchOptions& options = {},
                                const ClusterGraph& graph = cnot_graph());

/// Signs of the output-pair stabilizers after the ten internal measurements,
/// read off the state and from closed forms.
struct SignReport {
  unsigned branches = 0;
  unsigned mismatches = 0;
  double max_deviation = 0.0;  // | |<P>| - 1 | over all read-offs
};
/// sign of X_0 X_R X_S, Z_0 Z_R, X_6 X_S, Z_6 Z_R Z_S given internal outcomes m[v].
std::array<int, 4> closed_form_signs(const std::array<bit_t, kMeasured>& m);
SignReport check_eigen_signs(const ClusterGraph& graph = cnot_graph());

}  // namespace mbqc::verifier
