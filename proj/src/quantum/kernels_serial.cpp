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

#include "mbqc/quantum/kernels.hpp"

#include <bit>
#include <cmath>

namespace mbqc::kernels::serial {

namespace {

// Insert a zero bit at position q of i.
inline std::size_t insert_zero(std::size_t i, unsigned q) {
  const std::size_t low = i & ((std::size_t{1} << q) - 1);
  return ((i >> q) << (q + 1)) | low;
}

}  // namespace

void apply_matrix_1q(std::span<amp_t> amps, unsigned q, const Matrix2& m) {
  const std::size_t half = amps.size() / 2;
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_zero(k, q);
    const std::size_t i1 = i0 | bit;
    const amp_t a0 = amps[i0];
    const amp_t a1 = amps[i1];
    amps[i0] = m[0] * a0 + m[1] * a1;
    amps[i1] = m[2] * a0 + m[3] * a1;
  }
}

void apply_x(std::span<amp_t> amps, unsigned q) {
  const std::size_t half = amps.size() / 2;
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_zero(k, q);
    std::swap(amps[i0], amps[i0 | bit]);
  }
}

void apply_z(std::span<amp_t> amps, unsigned q) {
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & bit) amps[i] = -amps[i];
  }
}

void apply_cz(std::span<amp_t> amps, unsigned q1, unsigned q2) {
  const std::size_t mask = (std::size_t{1} << q1) | (std::size_t{1} << q2);
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & mask) == mask) amps[i] = -amps[i];
  }
}

void apply_cnot(std::span<amp_t> amps, unsigned control, unsigned target) {
  const std::size_t c = std::size_t{1} << control;
  const std::size_t t = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if ((i & c) && !(i & t)) std::swap(amps[i], amps[i | t]);
  }
}

double norm_squared(std::span<const amp_t> amps) {
  double sum = 0.0;
  for (const amp_t& a : amps) sum += std::norm(a);
  return sum;
}

double probability_one(std::span<const amp_t> amps, unsigned q) {
  const std::size_t bit = std::size_t{1} << q;
  double sum = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (i & bit) sum += std::norm(amps[i]);
  }
  return sum;
}

void project(std::span<amp_t> amps, unsigned q, int outcome, double scale) {
  const std::size_t bit = std::size_t{1} << q;
  const bool keep_one = outcome != 0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    if (static_cast<bool>(i & bit) == keep_one) {
      amps[i] *= scale;
    } else {
      amps[i] = 0.0;
    }
  }
}

amp_t inner_product(std::span<const amp_t> bra, std::span<const amp_t> ket) {
  amp_t sum = 0.0;
  for (std::size_t i = 0; i < bra.size(); ++i) sum += std::conj(bra[i]) * ket[i];
  return sum;
}

void extract_branch(std::span<const amp_t> src, unsigned q, int outcome, double scale,
                    std::span<amp_t> dst) {
  const std::size_t bit = outcome ? (std::size_t{1} << q) : 0;
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] = scale * src[insert_zero(k, q) | bit];
}

void append_plus(std::span<const amp_t> src, unsigned extra, std::span<amp_t> dst) {
  const double scale = std::pow(2.0, -0.5 * extra);
  const std::size_t mask = src.size() - 1;
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = scale * src[i & mask];
}

amp_t pauli_xz_sandwich(std::span<const amp_t> amps, std::uint64_t x_mask, std::uint64_t z_mask) {
  amp_t sum = 0.0;
  for (std::size_t i = 0; i < amps.size(); ++i) {
    const amp_t term = std::conj(amps[i ^ x_mask]) * amps[i];
    sum += (std::popcount(i & z_mask) & 1) ? -term : term;
  }
  return sum;
}

}  // namespace mbqc::kernels::serial
