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

#include "mbqc/patterns.hpp"

#include <numbers>

#include "mbqc/error.hpp"

namespace mbqc {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};

}  // namespace

void validate(const GateSpec& gate) {
  std::visit(overloaded{
                 [](const OneQubitGate&) {},
                 [](const CnotGate& g) {
                   const unsigned gap = g.control > g.target ? g.control - g.target
                                                             : g.target - g.control;
                   if (gap != 1) {
                     throw ContractViolation("CNOT rows " + std::to_string(g.control) + " and " +
                                             std::to_string(g.target) + " are not adjacent");
                   }
                 },
                 [](const IdentityGate& g) {
                   if (g.length < 2 || g.length % 2 != 0) {
                     throw ContractViolation("identity length must be even and >= 2, got " +
                                             std::to_string(g.length));
                   }
                 },
             },
             gate);
}

std::vector<unsigned> rows_of(const GateSpec& gate) {
  return std::visit(overloaded{
                        [](const OneQubitGate& g) { return std::vector<unsigned>{g.row}; },
                        [](const CnotGate& g) {
                          return g.control < g.target ? std::vector<unsigned>{g.control, g.target}
                                                      : std::vector<unsigned>{g.target, g.control};
                        },
                        [](const IdentityGate& g) { return std::vector<unsigned>{g.row}; },
                    },
                    gate);
}

unsigned pattern_length(const GateSpec& gate) {
  return std::visit(overloaded{
                        [](const OneQubitGate&) { return patterns::kOneQubitLength; },
                        [](const CnotGate&) { return patterns::kCnotLength; },
                        [](const IdentityGate& g) { return g.length; },
                    },
                    gate);
}

namespace patterns {

namespace {

// -0.0 prints as "-0.000000"; keep zero angles positive.
double negate(double angle) { return -angle + 0.0; }

}  // namespace

Pattern one_qubit_pattern(double xi, double eta, double zeta) {
  Pattern p;
  p.name = "u";
  p.rows = 1;
  p.length = kOneQubitLength;
  p.theta = {{0.0, negate(xi), negate(eta), negate(zeta)}};
  p.adaptive = {{
      AdaptiveRule{},
      AdaptiveRule{{0}, false, true},
      AdaptiveRule{{1}, true, false},
      AdaptiveRule{{0, 2}, false, true},
  }};
  RowRules rules;
  rules.z.sources = {{0, 0}, {0, 2}};
  rules.x.sources = {{0, 1}, {0, 3}};
  p.byproduct = {rules};
  p.pre_action = PreGateAction::store_byproducts;
  return p;
}

Pattern cnot_pattern() {
  constexpr double y = std::numbers::pi / 2;
  Pattern p;
  p.name = "cnot";
  p.rows = 2;
  p.length = kCnotLength;
  p.theta = {{0.0, y, y, 0.0, y, y}, {0.0, 0.0, 0.0, 0.0, 0.0, 0.0}};
  p.vertical_links = {3};
  p.adaptive.assign(2, std::vector<AdaptiveRule>(kCnotLength));

  // Control row m0..m5 -> (0, j); target row m6..m11 -> (1, j).
  RowRules control;
  control.z.sources = {{0, 0}, {0, 2}, {0, 3}, {0, 4}, {1, 0}, {1, 2}};
  control.z.constant = 1;
  control.z.constant_round = 2;
  control.x.sources = {{0, 1}, {0, 2}, {0, 4}, {0, 5}};
  RowRules target;
  target.z.sources = {{1, 0}, {1, 2}, {1, 4}};
  target.x.sources = {{0, 1}, {0, 2}, {1, 1}, {1, 3}, {1, 5}};
  p.byproduct = {control, target};
  p.pre_action = PreGateAction::cnot_commutation;
  return p;
}

Pattern identity_pattern(unsigned length) {
  validate(IdentityGate{0, length});
  Pattern p;
  p.name = "id";
  p.rows = 1;
  p.length = length;
  p.theta = {std::vector<double>(length, 0.0)};
  p.adaptive = {std::vector<AdaptiveRule>(length)};
  RowRules rules;
  for (unsigned j = 0; j < length; ++j) {
    (j % 2 == 0 ? rules.z : rules.x).sources.push_back({0, j});
  }
  p.byproduct = {rules};
  return p;
}

Pattern pattern_for(const GateSpec& gate) {
  validate(gate);
  return std::visit(overloaded{
                        [](const OneQubitGate& g) { return one_qubit_pattern(g.xi, g.eta, g.zeta); },
                        [](const CnotGate&) { return cnot_pattern(); },
                        [](const IdentityGate& g) { return identity_pattern(g.length); },
                    },
                    gate);
}

void check_causality(const Pattern& p) {
  auto in_range = [&](const MeasurementRef& r) { return r.row < p.rows && r.round < p.length; };
  for (unsigned row = 0; row < p.rows; ++row) {
    for (unsigned j = 0; j < p.length; ++j) {
      for (unsigned src : p.adaptive[row][j].sources) {
        if (src >= j) {
          throw ContractViolation(p.name + ": adaptive setting of round " + std::to_string(j) +
                                  " depends on round " + std::to_string(src));
        }
      }
    }
    for (const ByproductRule* rule : {&p.byproduct[row].x, &p.byproduct[row].z}) {
      for (const MeasurementRef& r : rule->sources) {
        if (!in_range(r)) throw ContractViolation(p.name + ": byproduct source out of range");
      }
      if (rule->constant && rule->constant_round >= p.length) {
        throw ContractViolation(p.name + ": constant round out of range");
      }
    }
  }
  for (unsigned j : p.vertical_links) {
    if (p.rows != 2 || j >= p.length) throw ContractViolation(p.name + ": bad vertical link");
  }
}

ByproductPair u_byproduct(ByproductPair b, std::span<const bit_t, 4> m) {
  return {static_cast<bit_t>(b.x ^ m[1] ^ m[3]), static_cast<bit_t>(b.z ^ m[0] ^ m[2])};
}

std::array<bit_t, 4> u_adaptive(bit_t x, bit_t z, bit_t m0, bit_t m1, bit_t m2) {
  return {0, static_cast<bit_t>(m0 ^ z), static_cast<bit_t>(m1 ^ x),
          static_cast<bit_t>(m0 ^ m2 ^ z)};
}

std::pair<ByproductPair, ByproductPair> cnot_byproduct(ByproductPair c, ByproductPair t,
                                                       std::span<const bit_t, 12> m) {
  ByproductPair c2;
  c2.z = c.z ^ m[0] ^ m[2] ^ m[3] ^ m[4] ^ m[6] ^ m[8] ^ 1;
  c2.x = c.x ^ m[1] ^ m[2] ^ m[4] ^ m[5];
  ByproductPair t2;
  t2.z = t.z ^ m[6] ^ m[8] ^ m[10];
  t2.x = t.x ^ m[1] ^ m[2] ^ m[7] ^ m[9] ^ m[11];
  return {c2, t2};
}

std::pair<ByproductPair, ByproductPair> cnot_commutation(ByproductPair c, ByproductPair t) {
  ByproductPair c2{c.x, static_cast<bit_t>(c.z ^ t.z)};
  ByproductPair t2{static_cast<bit_t>(t.x ^ c.x), t.z};
  return {c2, t2};
}

std::vector<ByproductPair> apply_byproduct_rules(const Pattern& p,
                                                 std::span<const ByproductPair> before,
                                                 const std::vector<std::vector<bit_t>>& outcomes) {
  if (before.size() != p.rows || outcomes.size() != p.rows) {
    throw ContractViolation("apply_byproduct_rules: row count mismatch");
  }
  auto fold = [&](const ByproductRule& rule, bit_t value) {
    for (const MeasurementRef& r : rule.sources) value ^= outcomes.at(r.row).at(r.round);
    return static_cast<bit_t>(value ^ rule.constant);
  };
  std::vector<ByproductPair> after(p.rows);
  for (unsigned row = 0; row < p.rows; ++row) {
    after[row].x = fold(p.byproduct[row].x, before[row].x);
    after[row].z = fold(p.byproduct[row].z, before[row].z);
  }
  return after;
}

bit_t adaptive_setting(const Pattern& p, unsigned row, unsigned round,
                       const std::vector<bit_t>& row_outcomes, ByproductPair stored) {
  const AdaptiveRule& rule = p.adaptive.at(row).at(round);
  bit_t s = 0;
  for (unsigned src : rule.sources) s ^= row_outcomes.at(src);
  if (rule.use_x) s ^= stored.x;
  if (rule.use_z) s ^= stored.z;
  return s;
}

}  // namespace patterns
}  // namespace mbqc
