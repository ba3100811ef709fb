// Copyright 2026 The qsim authors
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

#include <benchmark/benchmark.h>

#include "qsim/circuit_library.hpp"
#include "qsim/fsv_backend.hpp"
#include "qsim/unitary_backend.hpp"

namespace {

void BM_entangle_unitary(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const qsim::Circuit c = qsim::fully_entangled(n);
    const qsim::UnitarySimulator sim(qsim::ExecMode::Serial);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sim.simulate_full_state(c, {}));
    }
}

void BM_entangle_unitary_parallel(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const qsim::Circuit c = qsim::fully_entangled(n);
    const qsim::UnitarySimulator sim(qsim::ExecMode::Parallel);
    for (auto _ : state) {
        benchmark::DoNotOptimize(sim.simulate_full_state(c, {}));
    }
}

void BM_entangle_fsv(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const qsim::Circuit c = qsim::fully_entangled(n);
    const qsim::FsvSimulator sim;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sim.simulate_full_state(c, {}));
    }
}

void BM_qft_fsv(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const qsim::Circuit c = qsim::qft(n);
    const qsim::FsvSimulator sim;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sim.simulate_full_state(c, {}));
    }
}

void BM_deutsch_jozsa_fsv(benchmark::State& state) {
    const auto n_inputs = static_cast<std::size_t>(state.range(0));
    const auto program =
        qsim::deutsch_jozsa(n_inputs, [](std::uint64_t x) { return (x & 1) != 0; });
    const qsim::FsvSimulator sim;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sim.simulate_full_state(program.circuit, program.registry));
    }
}

} // namespace

BENCHMARK(BM_entangle_unitary)->DenseRange(4, 9);
BENCHMARK(BM_entangle_unitary_parallel)->DenseRange(4, 9);
BENCHMARK(BM_entangle_fsv)->DenseRange(4, 20, 4);
BENCHMARK(BM_qft_fsv)->DenseRange(4, 20, 4);
BENCHMARK(BM_deutsch_jozsa_fsv)->DenseRange(3, 15, 4);

BENCHMARK_MAIN();
