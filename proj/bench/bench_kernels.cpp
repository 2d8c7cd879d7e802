// Copyright 2026 The qntk Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// Serial reference kernels versus their OpenMP counterparts, plus one
// Monte-Carlo cell under both execution policies.

#include <complex>
#include <vector>

#include <benchmark/benchmark.h>

#include "qntk/concentration.hpp"
#include "qntk/kernels.hpp"
#include "qntk/rng.hpp"

namespace {

using qntk::complex_t;

std::vector<complex_t> random_amplitudes(std::size_t num_qubits) {
    qntk::RngStream rng(42);
    std::vector<complex_t> v(std::size_t{1} << num_qubits);
    for (auto &a : v) {
        a = rng.complex_normal();
    }
    return v;
}

template <bool Parallel> void BM_Rx(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto amps = random_amplitudes(n);
    for (auto _ : state) {
        for (std::size_t q = 0; q < n; ++q) {
            if constexpr (Parallel) {
                qntk::kernels::omp::apply_rx(amps, q, 0.3);
            } else {
                qntk::kernels::serial::apply_rx(amps, q, 0.3);
            }
        }
        benchmark::DoNotOptimize(amps.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(n * amps.size()));
}

template <bool Parallel> void BM_Cnot(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    auto amps = random_amplitudes(n);
    for (auto _ : state) {
        for (std::size_t q = 0; q + 1 < n; ++q) {
            if constexpr (Parallel) {
                qntk::kernels::omp::apply_cnot(amps, q, q + 1);
            } else {
                qntk::kernels::serial::apply_cnot(amps, q, q + 1);
            }
        }
        benchmark::DoNotOptimize(amps.data());
    }
}

template <bool Parallel> void BM_PauliElement(benchmark::State &state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto a = random_amplitudes(n);
    const auto b = random_amplitudes(n);
    for (auto _ : state) {
        complex_t z;
        if constexpr (Parallel) {
            z = qntk::kernels::omp::pauli_matrix_element(a, b, qntk::PauliAxis::Y, n / 2);
        } else {
            z = qntk::kernels::serial::pauli_matrix_element(a, b, qntk::PauliAxis::Y, n / 2);
        }
        benchmark::DoNotOptimize(z);
    }
}

void BM_Cell(benchmark::State &state) {
    qntk::CellOptions opts;
    opts.execution = state.range(0) ? qntk::Execution::Parallel : qntk::Execution::Serial;
    opts.bootstrap_resamples = 0;
    for (auto _ : state) {
        auto v = qntk::sample_kernel_values(8, 8, qntk::Encoding::GlobalHaar,
                                            qntk::Observable::zero_projector(), 64, 7, opts);
        benchmark::DoNotOptimize(v.data());
    }
}

} // namespace

BENCHMARK(BM_Rx<false>)->Arg(10)->Arg(14)->Arg(18)->Arg(20);
BENCHMARK(BM_Rx<true>)->Arg(10)->Arg(14)->Arg(18)->Arg(20);
BENCHMARK(BM_Cnot<false>)->Arg(10)->Arg(14)->Arg(18)->Arg(20);
BENCHMARK(BM_Cnot<true>)->Arg(10)->Arg(14)->Arg(18)->Arg(20);
BENCHMARK(BM_PauliElement<false>)->Arg(10)->Arg(14)->Arg(18)->Arg(20);
BENCHMARK(BM_PauliElement<true>)->Arg(10)->Arg(14)->Arg(18)->Arg(20);
BENCHMARK(BM_Cell)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
