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

#include <omp.h>

#include <bit>
#include <cmath>
#include <cstdint>
#include <vector>

namespace mbqc::kernels {

int omp_thread_count() { return omp_get_max_threads(); }

namespace omp {

namespace {

inline std::size_t insert_zero(std::size_t i, unsigned q) {
  const std::size_t low = i & ((std::size_t{1} << q) - 1);
  return ((i >> q) << (q + 1)) | low;
}

// Deterministic parallel sum: each thread owns one static block, partials are
// added in thread order.
template <typename T, typename F>
T ordered_reduce(std::size_t n, F&& term) {
  const bool parallel = n >= kParallelThreshold;
  const int threads = parallel ? omp_get_max_threads() : 1;
  std::vector<T> partial(static_cast<std::size_t>(threads), T{});
#pragma omp parallel num_threads(threads) if (parallel)
  {
    const auto t = static_cast<std::size_t>(omp_get_thread_num());
    const auto nt = static_cast<std::size_t>(omp_get_num_threads());
    const std::size_t begin = n * t / nt;
    const std::size_t end = n * (t + 1) / nt;
    T acc{};
    for (std::size_t i = begin; i < end; ++i) acc += term(i);
    partial[t] = acc;
  }
  T sum{};
  for (const T& p : partial) sum += p;
  return sum;
}

}  // namespace

void apply_matrix_1q(std::span<amp_t> amps, unsigned q, const Matrix2& m) {
  const auto half = static_cast<std::int64_t>(amps.size() / 2);
  const std::size_t bit = std::size_t{1} << q;
  amp_t* data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (std::int64_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_zero(static_cast<std::size_t>(k), q);
    const std::size_t i1 = i0 | bit;
    const amp_t a0 = data[i0];
    const amp_t a1 = data[i1];
    data[i0] = m[0] * a0 + m[1] * a1;
    data[i1] = m[2] * a0 + m[3] * a1;
  }
}

void apply_x(std::span<amp_t> amps, unsigned q) {
  const auto half = static_cast<std::int64_t>(amps.size() / 2);
  const std::size_t bit = std::size_t{1} << q;
  amp_t* data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (std::int64_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_zero(static_cast<std::size_t>(k), q);
    std::swap(data[i0], data[i0 | bit]);
  }
}

void apply_z(std::span<amp_t> amps, unsigned q) {
  const auto n = static_cast<std::int64_t>(amps.size());
  const std::size_t bit = std::size_t{1} << q;
  amp_t* data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) {
    if (static_cast<std::size_t>(i) & bit) data[i] = -data[i];
  }
}

void apply_cz(std::span<amp_t> amps, unsigned q1, unsigned q2) {
  const auto n = static_cast<std::int64_t>(amps.size());
  const std::size_t mask = (std::size_t{1} << q1) | (std::size_t{1} << q2);
  amp_t* data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) {
    if ((static_cast<std::size_t>(i) & mask) == mask) data[i] = -data[i];
  }
}

void apply_cnot(std::span<amp_t> amps, unsigned control, unsigned target) {
  // Iterate over indices with the target bit clear; each pair is touched once.
  const auto half = static_cast<std::int64_t>(amps.size() / 2);
  const std::size_t c = std::size_t{1} << control;
  const std::size_t t = std::size_t{1} << target;
  amp_t* data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (std::int64_t k = 0; k < half; ++k) {
    const std::size_t i0 = insert_zero(static_cast<std::size_t>(k), target);
    if (i0 & c) std::swap(data[i0], data[i0 | t]);
  }
}

double norm_squared(std::span<const amp_t> amps) {
  const amp_t* data = amps.data();
  return ordered_reduce<double>(amps.size(), [data](std::size_t i) { return std::norm(data[i]); });
}

double probability_one(std::span<const amp_t> amps, unsigned q) {
  const amp_t* data = amps.data();
  const std::size_t bit = std::size_t{1} << q;
  return ordered_reduce<double>(amps.size(), [data, bit](std::size_t i) {
    return (i & bit) ? std::norm(data[i]) : 0.0;
  });
}

void project(std::span<amp_t> amps, unsigned q, int outcome, double scale) {
  const auto n = static_cast<std::int64_t>(amps.size());
  const std::size_t bit = std::size_t{1} << q;
  const bool keep_one = outcome != 0;
  amp_t* data = amps.data();
#pragma omp parallel for schedule(static) if (amps.size() >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) {
    if (static_cast<bool>(static_cast<std::size_t>(i) & bit) == keep_one) {
      data[i] *= scale;
    } else {
      data[i] = 0.0;
    }
  }
}

amp_t inner_product(std::span<const amp_t> bra, std::span<const amp_t> ket) {
  const amp_t* b = bra.data();
  const amp_t* k = ket.data();
  return ordered_reduce<amp_t>(bra.size(), [b, k](std::size_t i) { return std::conj(b[i]) * k[i]; });
}

void extract_branch(std::span<const amp_t> src, unsigned q, int outcome, double scale,
                    std::span<amp_t> dst) {
  const std::size_t bit = outcome ? (std::size_t{1} << q) : 0;
  const auto n = static_cast<std::int64_t>(dst.size());
  const amp_t* in = src.data();
  amp_t* out = dst.data();
#pragma omp parallel for schedule(static) if (dst.size() >= kParallelThreshold)
  for (std::int64_t k = 0; k < n; ++k) {
    out[k] = scale * in[insert_zero(static_cast<std::size_t>(k), q) | bit];
  }
}

void append_plus(std::span<const amp_t> src, unsigned extra, std::span<amp_t> dst) {
  const double scale = std::pow(2.0, -0.5 * extra);
  const std::size_t mask = src.size() - 1;
  const auto n = static_cast<std::int64_t>(dst.size());
  const amp_t* in = src.data();
  amp_t* out = dst.data();
#pragma omp parallel for schedule(static) if (dst.size() >= kParallelThreshold)
  for (std::int64_t i = 0; i < n; ++i) out[i] = scale * in[static_cast<std::size_t>(i) & mask];
}

amp_t pauli_xz_sandwich(std::span<const amp_t> amps, std::uint64_t x_mask, std::uint64_t z_mask) {
  const amp_t* data = amps.data();
  return ordered_reduce<amp_t>(amps.size(), [data, x_mask, z_mask](std::size_t i) {
    const amp_t term = std::conj(data[i ^ x_mask]) * data[i];
    return (std::popcount(i & z_mask) & 1) ? -term : term;
  });
}

}  // namespace omp
}  // namespace mbqc::kernels
