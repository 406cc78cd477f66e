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

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

#include "mbqc/quantum/kernels.hpp"
#include "mbqc/quantum/pauli_string.hpp"

namespace mbqc {

using amp_t = std::complex<double>;

/// Rotations are R_n(a) = exp(-i a n.sigma / 2) (right-hand rule).
kernels::Matrix2 rx_matrix(double angle);
kernels::Matrix2 ry_matrix(double angle);
kernels::Matrix2 rz_matrix(double angle);

/// Dense n-qubit state. Qubit q is bit q of the amplitude index.
///
/// Every mutating operation keeps the vector normalised; the global phase is
/// never touched, so comparisons go through fidelity_up_to_phase().
class StateVector {
 public:
  static constexpr std::size_t kDefaultMaxAmplitudes = std::size_t{1} << 24;

  /// |0...0> on n qubits.
  explicit StateVector(unsigned n_qubits, std::size_t max_amplitudes = kDefaultMaxAmplitudes);
  /// Takes ownership of amplitudes; size must be a power of two and norm 1 within 1e-10.
  static StateVector from_amplitudes(std::vector<amp_t> amplitudes,
                                     std::size_t max_amplitudes = kDefaultMaxAmplitudes);
  static StateVector basis_state(unsigned n_qubits, std::uint64_t index,
                                 std::size_t max_amplitudes = kDefaultMaxAmplitudes);

  unsigned n_qubits() const { return n_qubits_; }
  std::size_t size() const { return amps_.size(); }
  std::size_t max_amplitudes() const { return max_amplitudes_; }
  std::span<const amp_t> amplitudes() const { return amps_; }
  amp_t operator[](std::size_t i) const { return amps_[i]; }

  void apply_matrix(unsigned q, const kernels::Matrix2& m);
  void apply_rx(unsigned q, double angle);
  void apply_ry(unsigned q, double angle);
  void apply_rz(unsigned q, double angle);
  void apply_x(unsigned q);
  void apply_z(unsigned q);
  void apply_cz(unsigned q1, unsigned q2);
  void apply_cnot(unsigned control, unsigned target);

  /// P(outcome 1) for a Z measurement of q.
  double probability_one(unsigned q) const;

  /// Z measurement. Outcome is 1 iff draw < P(1); the state collapses and is
  /// renormalised. Throws InternalError if both branches have zero weight.
  int measure_z(unsigned q, double draw);
  /// Post-selects outcome on q and renormalises; returns its prior probability.
  /// Throws ImpossibleBranch when that probability is below min_probability.
  double project_z(unsigned q, int outcome, double min_probability = 1e-12);

  /// XY-plane measurement at angle phi: R_z(pi/2 - phi), R_x(pi/2), then Z.
  /// Outcome 0 corresponds to (|0> + e^{i phi}|1>)/sqrt(2).
  int measure_in_equator(unsigned q, double phi, double draw);
  double project_in_equator(unsigned q, double phi, int outcome, double min_probability = 1e-12);

  /// Drops qubit q, which must already be |0> or |1> (unentangled). Qubits
  /// above q shift down by one.
  void remove_qubit(unsigned q);
  /// Tensors |+>^extra onto the top of the register (new qubits n..n+extra-1).
  void append_plus_qubits(unsigned extra);

  double norm_squared() const;

  /// <psi|P|psi> including P's phase.
  amp_t expectation_complex(const PauliString& p) const;
  /// Real expectation for a Hermitian (+/-1 phase) string; throws
  /// ContractViolation if P is not Hermitian or the result has an imaginary
  /// part above 1e-10.
  double expectation(const PauliString& p) const;

 private:
  StateVector() = default;
  void check_qubit(unsigned q) const;
  static void check_capacity(unsigned n_qubits, std::size_t max_amplitudes);

  unsigned n_qubits_ = 0;
  std::size_t max_amplitudes_ = kDefaultMaxAmplitudes;
  std::vector<amp_t> amps_;
};

/// Uniform superposition |+>^n. Throws ResourceError above the amplitude cap.
StateVector new_plus_state(unsigned n_qubits,
                           std::size_t max_amplitudes = StateVector::kDefaultMaxAmplitudes);

/// Haar-like random state from complex Gaussian amplitudes (mt19937_64 seed).
StateVector random_state(unsigned n_qubits, std::uint64_t seed,
                         std::size_t max_amplitudes = StateVector::kDefaultMaxAmplitudes);

/// |<a|b>|, in [0, 1]; 1 means equal up to a global phase.
double fidelity_up_to_phase(const StateVector& a, const StateVector& b);

}  // namespace mbqc
