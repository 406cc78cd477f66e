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

// Serial reference kernels against their OpenMP counterparts, plus the
// end-to-end workloads that sit on top of them.

#include <benchmark/benchmark.h>

#include <vector>

#include "mbqc/circuit.hpp"
#include "mbqc/compiler.hpp"
#include "mbqc/quantum/kernels.hpp"
#include "mbqc/quantum/state_vector.hpp"
#include "mbqc/simulator.hpp"
#include "mbqc/verifier.hpp"

namespace {

using namespace mbqc;
namespace ks = kernels::serial;
namespace ko = kernels::omp;

std::vector<amp_t> amps_for(benchmark::State& state) {
  const StateVector s = random_state(static_cast<unsigned>(state.range(0)), 1);
  return {s.amplitudes().begin(), s.amplitudes().end()};
}

void set_bytes(benchmark::State& state, std::size_t n) {
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * n * sizeof(amp_t)));
}

template <auto Fn>
void bm_matrix(benchmark::State& state) {
  auto a = amps_for(state);
  const kernels::Matrix2 m = rx_matrix(0.3);
  const unsigned q = static_cast<unsigned>(state.range(0)) / 2;
  for (auto _ : state) {
    Fn(a, q, m);
    benchmark::ClobberMemory();
  }
  set_bytes(state, a.size());
}

template <auto Fn>
void bm_cz(benchmark::State& state) {
  auto a = amps_for(state);
  for (auto _ : state) {
    Fn(a, 1, static_cast<unsigned>(state.range(0)) - 1);
    benchmark::ClobberMemory();
  }
  set_bytes(state, a.size());
}

template <auto Fn>
void bm_norm(benchmark::State& state) {
  const auto a = amps_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(a));
  set_bytes(state, a.size());
}

template <auto Fn>
void bm_probability(benchmark::State& state) {
  const auto a = amps_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(a, 3));
  set_bytes(state, a.size());
}

template <auto Fn>
void bm_sandwich(benchmark::State& state) {
  const auto a = amps_for(state);
  for (auto _ : state) benchmark::DoNotOptimize(Fn(a, 0b1011, 0b110110));
  set_bytes(state, a.size());
}

template <auto Fn>
void bm_append(benchmark::State& state) {
  const auto a = amps_for(state);
  std::vector<amp_t> out(a.size() * 4);
  for (auto _ : state) {
    Fn(a, 2, out);
    benchmark::ClobberMemory();
  }
  set_bytes(state, out.size());
}

BENCHMARK(bm_matrix<ks::apply_matrix_1q>)->Name("serial/apply_matrix_1q")->DenseRange(10, 22, 4);
BENCHMARK(bm_matrix<ko::apply_matrix_1q>)->Name("omp/apply_matrix_1q")->DenseRange(10, 22, 4);
BENCHMARK(bm_cz<ks::apply_cz>)->Name("serial/apply_cz")->DenseRange(10, 22, 4);
BENCHMARK(bm_cz<ko::apply_cz>)->Name("omp/apply_cz")->DenseRange(10, 22, 4);
BENCHMARK(bm_norm<ks::norm_squared>)->Name("serial/norm_squared")->DenseRange(10, 22, 4);
BENCHMARK(bm_norm<ko::norm_squared>)->Name("omp/norm_squared")->DenseRange(10, 22, 4);
BENCHMARK(bm_probability<ks::probability_one>)->Name("serial/probability_one")->DenseRange(10, 22, 4);
BENCHMARK(bm_probability<ko::probability_one>)->Name("omp/probability_one")->DenseRange(10, 22, 4);
BENCHMARK(bm_sandwich<ks::pauli_xz_sandwich>)->Name("serial/pauli_xz_sandwich")->DenseRange(10, 22, 4);
BENCHMARK(bm_sandwich<ko::pauli_xz_sandwich>)->Name("omp/pauli_xz_sandwich")->DenseRange(10, 22, 4);
BENCHMARK(bm_append<ks::append_plus>)->Name("serial/append_plus")->DenseRange(10, 18, 4);
BENCHMARK(bm_append<ko::append_plus>)->Name("omp/append_plus")->DenseRange(10, 18, 4);

void bm_run_mbqc(benchmark::State& state) {
  Circuit c;
  c.n_rows = static_cast<unsigned>(state.range(0));
  for (unsigned r = 0; r < c.n_rows; ++r) c.add(OneQubitGate{0.1 * r, 0.2, 0.3, r});
  c.new_layer();
  for (unsigned r = 0; r + 1 < c.n_rows; r += 2) c.add(CnotGate{r, r + 1});
  const ProgramImage img = compile(c);
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(run_mbqc(img, seed++).max_norm_error);
}
BENCHMARK(bm_run_mbqc)->Name("simulate/run_mbqc")->DenseRange(2, 8, 2)->Unit(benchmark::kMillisecond);

void bm_branches(benchmark::State& state) {
  const StateVector in = StateVector::basis_state(2, 0b01);
  for (auto _ : state) benchmark::DoNotOptimize(verifier::enumerate_branches(in).fidelity_pass);
}
BENCHMARK(bm_branches)->Name("verify/all_branches")->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
