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
#include <string>
#include <string_view>
#include <vector>

namespace mbqc {

/// Single-qubit Pauli letter; bit 0 is the X component, bit 1 the Z component.
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

char to_char(Pauli p);

/// Tensor product of Pauli letters with an exact phase i^phase_exponent.
///
/// Products track the phase as an integer mod 4 (X*Z = -iY and friends), so
/// signs like the leading minus of a stabilizer product are reproduced exactly
/// rather than through floating-point arithmetic.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n_qubits) : letters_(n_qubits, Pauli::I) {}

  /// Parses "XIZY", "+XZ", "-YY", "+iX", "-iZ". Letter k acts on qubit k.
  static PauliString parse(std::string_view text);

  std::size_t size() const { return letters_.size(); }
  Pauli operator[](std::size_t q) const { return letters_[q]; }
  void set(std::size_t q, Pauli p) { letters_[q] = p; }

  /// Phase is i^phase_exponent(), exponent in [0, 4).
  int phase_exponent() const { return phase_; }
  void set_phase_exponent(int k) { phase_ = ((k % 4) + 4) % 4; }
  std::complex<double> phase() const;
  bool is_hermitian() const { return phase_ % 2 == 0; }

  std::uint64_t x_mask() const;
  std::uint64_t z_mask() const;
  int y_count() const;
  /// Support size (non-identity letters).
  std::size_t weight() const;

  PauliString& operator*=(const PauliString& rhs);
  friend PauliString operator*(PauliString lhs, const PauliString& rhs) { return lhs *= rhs; }
  friend bool operator==(const PauliString&, const PauliString&) = default;

  std::string to_string() const;

 private:
  std::vector<Pauli> letters_;
  int phase_ = 0;
};

}  // namespace mbqc
