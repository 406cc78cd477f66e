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

#include "mbqc/quantum/state_vector.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numbers>
#include <random>
#include <string>

#include "mbqc/error.hpp"

namespace mbqc {

namespace k = kernels::omp;

kernels::Matrix2 rx_matrix(double angle) {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  return {amp_t{c, 0}, amp_t{0, -s}, amp_t{0, -s}, amp_t{c, 0}};
}

kernels::Matrix2 ry_matrix(double angle) {
  const double c = std::cos(angle / 2);
  const double s = std::sin(angle / 2);
  return {amp_t{c, 0}, amp_t{-s, 0}, amp_t{s, 0}, amp_t{c, 0}};
}

kernels::Matrix2 rz_matrix(double angle) {
  return {std::polar(1.0, -angle / 2), amp_t{0, 0}, amp_t{0, 0}, std::polar(1.0, angle / 2)};
}

void StateVector::check_capacity(unsigned n_qubits, std::size_t max_amplitudes) {
  if (n_qubits >= 63 || (std::size_t{1} << n_qubits) > max_amplitudes) {
    throw ResourceError("state of " + std::to_string(n_qubits) +
                        " qubits exceeds the amplitude cap of " + std::to_string(max_amplitudes));
  }
}

StateVector::StateVector(unsigned n_qubits, std::size_t max_amplitudes)
    : n_qubits_(n_qubits), max_amplitudes_(max_amplitudes) {
  check_capacity(n_qubits, max_amplitudes);
  amps_.assign(std::size_t{1} << n_qubits, amp_t{0, 0});
  amps_[0] = 1.0;
}

StateVector StateVector::from_amplitudes(std::vector<amp_t> amplitudes, std::size_t max_amplitudes) {
  const std::size_t n = amplitudes.size();
  if (n == 0 || (n & (n - 1)) != 0) {
    throw ContractViolation("amplitude count must be a power of two");
  }
  StateVector out;
  out.n_qubits_ = static_cast<unsigned>(std::countr_zero(n));
  out.max_amplitudes_ = max_amplitudes;
  check_capacity(out.n_qubits_, max_amplitudes);
  out.amps_ = std::move(amplitudes);
  if (std::abs(out.norm_squared() - 1.0) > 1e-10) {
    throw ContractViolation("amplitudes are not normalised");
  }
  return out;
}

StateVector StateVector::basis_state(unsigned n_qubits, std::uint64_t index,
                                     std::size_t max_amplitudes) {
  StateVector out(n_qubits, max_amplitudes);
  if (index >= out.size()) throw ContractViolation("basis index out of range");
  out.amps_[0] = 0.0;
  out.amps_[index] = 1.0;
  return out;
}

StateVector new_plus_state(unsigned n_qubits, std::size_t max_amplitudes) {
  if (n_qubits == 0) throw ContractViolation("new_plus_state needs at least one qubit");
  StateVector out(n_qubits, max_amplitudes);
  const double a = std::pow(2.0, -0.5 * n_qubits);
  std::vector<amp_t> amps(out.size(), amp_t{a, 0});
  return StateVector::from_amplitudes(std::move(amps), max_amplitudes);
}

StateVector random_state(unsigned n_qubits, std::uint64_t seed, std::size_t max_amplitudes) {
  StateVector out(n_qubits, max_amplitudes);
  std::mt19937_64 engine(seed);
  std::normal_distribution<double> gauss;
  std::vector<amp_t> amps(out.size());
  double norm = 0.0;
  for (amp_t& a : amps) {
    a = {gauss(engine), gauss(engine)};
    norm += std::norm(a);
  }
  const double scale = 1.0 / std::sqrt(norm);
  for (amp_t& a : amps) a *= scale;
  return StateVector::from_amplitudes(std::move(amps), max_amplitudes);
}

void StateVector::check_qubit(unsigned q) const {
  if (q >= n_qubits_) {
    throw ContractViolation("qubit index " + std::to_string(q) + " out of range for " +
                            std::to_string(n_qubits_) + " qubits");
  }
}

void StateVector::apply_matrix(unsigned q, const kernels::Matrix2& m) {
  check_qubit(q);
  k::apply_matrix_1q(amps_, q, m);
}

void StateVector::apply_rx(unsigned q, double angle) {
  if (angle == 0.0) {
    check_qubit(q);
    return;
  }
  apply_matrix(q, rx_matrix(angle));
}

void StateVector::apply_ry(unsigned q, double angle) {
  if (angle == 0.0) {
    check_qubit(q);
    return;
  }
  apply_matrix(q, ry_matrix(angle));
}

void StateVector::apply_rz(unsigned q, double angle) {
  if (angle == 0.0) {
    check_qubit(q);
    return;
  }
  apply_matrix(q, rz_matrix(angle));
}

void StateVector::apply_x(unsigned q) {
  check_qubit(q);
  k::apply_x(amps_, q);
}

void StateVector::apply_z(unsigned q) {
  check_qubit(q);
  k::apply_z(amps_, q);
}

void StateVector::apply_cz(unsigned q1, unsigned q2) {
  check_qubit(q1);
  check_qubit(q2);
  if (q1 == q2) throw ContractViolation("CZ needs two distinct qubits");
  k::apply_cz(amps_, q1, q2);
}

void StateVector::apply_cnot(unsigned control, unsigned target) {
  check_qubit(control);
  check_qubit(target);
  if (control == target) throw ContractViolation("CNOT needs two distinct qubits");
  k::apply_cnot(amps_, control, target);
}

double StateVector::probability_one(unsigned q) const {
  check_qubit(q);
  return k::probability_one(amps_, q) / k::norm_squared(amps_);
}

double StateVector::norm_squared() const { return k::norm_squared(amps_); }

int StateVector::measure_z(unsigned q, double draw) {
  check_qubit(q);
  const double total = k::norm_squared(amps_);
  const double p1_raw = k::probability_one(amps_, q);
  const double p0_raw = std::max(total - p1_raw, 0.0);
  if (!(p1_raw > 0.0) && !(p0_raw > 0.0)) {
    throw InternalError("measure_z: zero norm on both branches of qubit " + std::to_string(q));
  }
  const double p1 = p1_raw / total;
  const int outcome = draw < p1 ? 1 : 0;
  const double kept = outcome ? p1_raw : p0_raw;
  k::project(amps_, q, outcome, 1.0 / std::sqrt(kept));
  return outcome;
}

double StateVector::project_z(unsigned q, int outcome, double min_probability) {
  check_qubit(q);
  const double total = k::norm_squared(amps_);
  const double p1 = k::probability_one(amps_, q) / total;
  const double p = outcome ? p1 : 1.0 - p1;
  if (!(p >= min_probability)) {
    throw ImpossibleBranch("forced outcome " + std::to_string(outcome) + " on qubit " +
                               std::to_string(q) + " has probability " + std::to_string(p),
                           p);
  }
  k::project(amps_, q, outcome, 1.0 / std::sqrt(p * total));
  return p;
}

int StateVector::measure_in_equator(unsigned q, double phi, double draw) {
  apply_rz(q, std::numbers::pi / 2 - phi);
  apply_rx(q, std::numbers::pi / 2);
  return measure_z(q, draw);
}

double StateVector::project_in_equator(unsigned q, double phi, int outcome, double min_probability) {
  apply_rz(q, std::numbers::pi / 2 - phi);
  apply_rx(q, std::numbers::pi / 2);
  return project_z(q, outcome, min_probability);
}

void StateVector::remove_qubit(unsigned q) {
  check_qubit(q);
  if (n_qubits_ == 1) throw ContractViolation("cannot remove the last qubit");
  const double total = k::norm_squared(amps_);
  const double p1 = k::probability_one(amps_, q) / total;
  const double p0 = 1.0 - p1;
  if (std::min(p0, p1) > 1e-10) {
    throw ContractViolation("remove_qubit: qubit " + std::to_string(q) +
                            " is not in a computational basis state (min branch weight " +
                            std::to_string(std::min(p0, p1)) + ")");
  }
  const int keep = p1 > p0 ? 1 : 0;
  std::vector<amp_t> next(amps_.size() / 2);
  k::extract_branch(amps_, q, keep, 1.0 / std::sqrt((keep ? p1 : p0) * total), next);
  amps_ = std::move(next);
  --n_qubits_;
}

void StateVector::append_plus_qubits(unsigned extra) {
  if (extra == 0) return;
  check_capacity(n_qubits_ + extra, max_amplitudes_);
  std::vector<amp_t> next(amps_.size() << extra);
  k::append_plus(amps_, extra, next);
  amps_ = std::move(next);
  n_qubits_ += extra;
}

amp_t StateVector::expectation_complex(const PauliString& p) const {
  if (p.size() != n_qubits_) {
    throw ContractViolation("PauliString length " + std::to_string(p.size()) +
                            " does not match " + std::to_string(n_qubits_) + " qubits");
  }
  // P = phase * i^{#Y} X^x Z^z, since Y = iXZ.
  const amp_t sandwich = k::pauli_xz_sandwich(amps_, p.x_mask(), p.z_mask());
  PauliString y_phase(0);
  y_phase.set_phase_exponent(p.phase_exponent() + p.y_count());
  return y_phase.phase() * sandwich;
}

double StateVector::expectation(const PauliString& p) const {
  if (!p.is_hermitian()) throw ContractViolation("expectation of a non-Hermitian PauliString");
  const amp_t e = expectation_complex(p);
  if (std::abs(e.imag()) > 1e-10) {
    throw ContractViolation("expectation has imaginary part " + std::to_string(e.imag()));
  }
  return e.real();
}

double fidelity_up_to_phase(const StateVector& a, const StateVector& b) {
  if (a.n_qubits() != b.n_qubits()) {
    throw ContractViolation("fidelity_up_to_phase: dimension mismatch");
  }
  return std::min(1.0, std::abs(k::inner_product(a.amplitudes(), b.amplitudes())));
}

}  // namespace mbqc
