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

// Measurement patterns for the arbitrary one-qubit gate
// U = R_x(zeta) R_z(eta) R_x(xi), the two-row nearest-neighbour CNOT and
// identity padding, plus the byproduct / adaptive-setting / commutation
// equations they are built from. These are the source of truth the compiler
// lowers into program words, and the oracle the controller is tested against.
//
// Pattern-local numbering: round j of local row r. For the CNOT, local row 0 is
// the control (cluster qubits 0..5) and local row 1 the target (6..11).

#include <array>
#include <cstdint>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace mbqc {

using bit_t = std::uint8_t;

/// Byproduct operator of one logical row, B = Z^z X^x.
struct ByproductPair {
  bit_t x = 0;
  bit_t z = 0;
  friend bool operator==(const ByproductPair&, const ByproductPair&) = default;
};

struct OneQubitGate {
  double xi = 0.0;
  double eta = 0.0;
  double zeta = 0.0;
  unsigned row = 0;
};

struct CnotGate {
  unsigned control = 0;
  unsigned target = 1;
};

struct IdentityGate {
  unsigned row = 0;
  unsigned length = 2;
};

using GateSpec = std::variant<OneQubitGate, CnotGate, IdentityGate>;

/// Throws ContractViolation for non-adjacent CNOT rows or odd/short identities.
void validate(const GateSpec& gate);
/// Rows the gate occupies, ascending.
std::vector<unsigned> rows_of(const GateSpec& gate);
unsigned pattern_length(const GateSpec& gate);

namespace patterns {

inline constexpr unsigned kOneQubitLength = 4;
inline constexpr unsigned kCnotLength = 6;

/// A measurement outcome referenced by a rule: round `round` of local row `row`.
struct MeasurementRef {
  unsigned row = 0;
  unsigned round = 0;
  friend bool operator==(const MeasurementRef&, const MeasurementRef&) = default;
};

/// One byproduct bit's update: new = old xor (xor of sources) xor constant.
struct ByproductRule {
  std::vector<MeasurementRef> sources;
  bit_t constant = 0;
  /// Local round at whose boundary the constant is folded in.
  unsigned constant_round = 0;
};

/// s for a measurement = xor of same-row earlier outcomes xor selected bits of
/// the byproduct held before the pattern started.
struct AdaptiveRule {
  std::vector<unsigned> sources;
  bool use_x = false;
  bool use_z = false;
  bool empty() const { return sources.empty() && !use_x && !use_z; }
};

enum class PreGateAction { none, store_byproducts, cnot_commutation };

struct RowRules {
  ByproductRule x;
  ByproductRule z;
};

struct Pattern {
  std::string name;
  unsigned rows = 1;
  unsigned length = 0;
  /// theta[row][round]; X measurements are 0, Y measurements pi/2.
  std::vector<std::vector<double>> theta;
  /// Local rounds with a vertical link between local rows 0 and 1.
  std::vector<unsigned> vertical_links;
  /// adaptive[row][round]
  std::vector<std::vector<AdaptiveRule>> adaptive;
  /// byproduct[row]
  std::vector<RowRules> byproduct;
  PreGateAction pre_action = PreGateAction::none;
};

Pattern one_qubit_pattern(double xi, double eta, double zeta);
Pattern cnot_pattern();
/// length must be even and >= 2.
Pattern identity_pattern(unsigned length);
Pattern pattern_for(const GateSpec& gate);

/// Throws ContractViolation if any adaptive source does not point to a
/// strictly earlier round, or a rule references a row/round outside the pattern.
void check_causality(const Pattern& p);

// Equations, verbatim.

/// z' = z ^ m0 ^ m2, x' = x ^ m1 ^ m3.
ByproductPair u_byproduct(ByproductPair b, std::span<const bit_t, 4> m);
/// s0 = 0, s1 = m0 ^ z, s2 = m1 ^ x, s3 = m0 ^ m2 ^ z.
std::array<bit_t, 4> u_adaptive(bit_t x, bit_t z, bit_t m0, bit_t m1, bit_t m2);
/// CNOT byproduct update, m[0..5] control row, m[6..11] target row.
std::pair<ByproductPair, ByproductPair> cnot_byproduct(ByproductPair control, ByproductPair target,
                                                       std::span<const bit_t, 12> m);
/// Commutation past CNOT: z_c ^= z_t, x_t ^= x_c.
std::pair<ByproductPair, ByproductPair> cnot_commutation(ByproductPair control,
                                                         ByproductPair target);

// Generic rule evaluation (used to cross-check patterns against the equations).

/// outcomes[row][round]; returns post-pattern byproducts per local row.
std::vector<ByproductPair> apply_byproduct_rules(const Pattern& p,
                                                 std::span<const ByproductPair> before,
                                                 const std::vector<std::vector<bit_t>>& outcomes);
bit_t adaptive_setting(const Pattern& p, unsigned row, unsigned round,
                       const std::vector<bit_t>& row_outcomes, ByproductPair stored);

}  // namespace patterns
}  // namespace mbqc
