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

// Dense state-vector kernels. Amplitude index bit q holds qubit q
// (little-endian). Two implementations share one signature set:
//   serial::  straight loops, the reference the tests compare against
//   omp::     OpenMP data-parallel loops used by StateVector
// Element-wise kernels are bit-identical between the two. Reductions in omp::
// use fixed static partitions summed in thread order, so they are
// deterministic for a given thread count and agree with serial:: to rounding.

#include <array>
#include <complex>
#include <cstdint>
#include <span>

namespace mbqc::kernels {

using amp_t = std::complex<double>;
/// Row-major 2x2 matrix {m00, m01, m10, m11}.
using Matrix2 = std::array<amp_t, 4>;

/// Work below this many amplitudes stays on one thread.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 12;

#define MBQC_KERNEL_DECLS                                                                  \
  void apply_matrix_1q(std::span<amp_t> amps, unsigned q, const Matrix2& m);              \
  void apply_x(std::span<amp_t> amps, unsigned q);                                         \
  void apply_z(std::span<amp_t> amps, unsigned q);                                         \
  void apply_cz(std::span<amp_t> amps, unsigned q1, unsigned q2);                          \
  void apply_cnot(std::span<amp_t> amps, unsigned control, unsigned target);               \
  double norm_squared(std::span<const amp_t> amps);                                        \
  double probability_one(std::span<const amp_t> amps, unsigned q);                         \
  void project(std::span<amp_t> amps, unsigned q, int outcome, double scale);              \
  amp_t inner_product(std::span<const amp_t> bra, std::span<const amp_t> ket);             \
  /* dst[k] = scale * src[k with bit q := outcome inserted]; dst.size() == src.size()/2 */ \
  void extract_branch(std::span<const amp_t> src, unsigned q, int outcome, double scale,   \
                      std::span<amp_t> dst);                                               \
  /* dst = src (x) |+>^extra, new qubits above the existing ones */                       \
  void append_plus(std::span<const amp_t> src, unsigned extra, std::span<amp_t> dst);      \
  /* sum_i conj(psi[i ^ x_mask]) * (-1)^popcount(i & z_mask) * psi[i] */                 \
  amp_t pauli_xz_sandwich(std::span<const amp_t> amps, std::uint64_t x_mask,               \
                          std::uint64_t z_mask);

namespace serial {
MBQC_KERNEL_DECLS
}  // namespace serial

namespace omp {
MBQC_KERNEL_DECLS
}  // namespace omp

#undef MBQC_KERNEL_DECLS

/// Number of OpenMP threads the omp:: kernels will use.
int omp_thread_count();

}  // namespace mbqc::kernels
