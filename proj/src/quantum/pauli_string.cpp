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

#include "mbqc/quantum/pauli_string.hpp"

#include "mbqc/error.hpp"

namespace mbqc {

namespace {

// Phase exponent k (i^k) of the single-qubit product a*b.
int product_phase(Pauli a, Pauli b) {
  if (a == Pauli::I || b == Pauli::I || a == b) return 0;
  // Cyclic order X -> Y -> Z -> X gives +i, anticyclic gives -i.
  auto cyc = [](Pauli p) {
    switch (p) {
      case Pauli::X: return 0;
      case Pauli::Y: return 1;
      default: return 2;
    }
  };
  return ((cyc(b) - cyc(a) + 3) % 3 == 1) ? 1 : 3;
}

}  // namespace

char to_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

PauliString PauliString::parse(std::string_view text) {
  int phase = 0;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    if (text.front() == '-') phase = 2;
    text.remove_prefix(1);
    if (!text.empty() && text.front() == 'i') {
      phase += 1;
      text.remove_prefix(1);
    }
  }
  PauliString out(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I': case '_': out.letters_[q] = Pauli::I; break;
      case 'X': out.letters_[q] = Pauli::X; break;
      case 'Y': out.letters_[q] = Pauli::Y; break;
      case 'Z': out.letters_[q] = Pauli::Z; break;
      default:
        throw ContractViolation(std::string("bad Pauli letter '") + text[q] + "'");
    }
  }
  out.set_phase_exponent(phase);
  return out;
}

std::complex<double> PauliString::phase() const {
  switch (phase_) {
    case 0: return {1.0, 0.0};
    case 1: return {0.0, 1.0};
    case 2: return {-1.0, 0.0};
    default: return {0.0, -1.0};
  }
}

std::uint64_t PauliString::x_mask() const {
  std::uint64_t m = 0;
  for (std::size_t q = 0; q < letters_.size(); ++q) {
    if (static_cast<std::uint8_t>(letters_[q]) & 1U) m |= std::uint64_t{1} << q;
  }
  return m;
}

std::uint64_t PauliString::z_mask() const {
  std::uint64_t m = 0;
  for (std::size_t q = 0; q < letters_.size(); ++q) {
    if (static_cast<std::uint8_t>(letters_[q]) & 2U) m |= std::uint64_t{1} << q;
  }
  return m;
}

int PauliString::y_count() const {
  int n = 0;
  for (Pauli p : letters_) n += (p == Pauli::Y);
  return n;
}

std::size_t PauliString::weight() const {
  std::size_t n = 0;
  for (Pauli p : letters_) n += (p != Pauli::I);
  return n;
}

PauliString& PauliString::operator*=(const PauliString& rhs) {
  if (rhs.size() != size()) throw ContractViolation("PauliString product: length mismatch");
  int phase = phase_ + rhs.phase_;
  for (std::size_t q = 0; q < letters_.size(); ++q) {
    phase += product_phase(letters_[q], rhs.letters_[q]);
    letters_[q] = static_cast<Pauli>(static_cast<std::uint8_t>(letters_[q]) ^
                                     static_cast<std::uint8_t>(rhs.letters_[q]));
  }
  set_phase_exponent(phase);
  return *this;
}

std::string PauliString::to_string() const {
  static constexpr const char* kPrefix[] = {"+", "+i", "-", "-i"};
  std::string out = kPrefix[phase_];
  for (Pauli p : letters_) out += to_char(p);
  return out;
}

}  // namespace mbqc
