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
/**
 * @file kernels.hpp
 * Statevector gate kernels over raw amplitude spans.
 *
 * Every kernel exists twice: `serial::` is the straight-line reference used
 * by the tests, `omp::` is the OpenMP version used by Statevector. Qubit q
 * addresses bit q of the amplitude index (qubit 0 is the least significant
 * bit). The `omp::` kernels fall back to a single thread below
 * `kParallelThreshold` amplitudes or when already inside a parallel region.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace qntk {

using complex_t = std::complex<double>;

enum class PauliAxis { X, Y, Z };

namespace kernels {

/// Amplitude count below which OpenMP kernels run single-threaded.
inline constexpr std::size_t kParallelThreshold = std::size_t{1} << 13;

namespace serial {
void apply_rx(std::span<complex_t> amps, std::size_t qubit, double angle);
void apply_rz(std::span<complex_t> amps, std::size_t qubit, double angle);
void apply_cnot(std::span<complex_t> amps, std::size_t control, std::size_t target);
void apply_pauli(std::span<complex_t> amps, PauliAxis axis, std::size_t qubit);
/// <bra| P_qubit |ket>
complex_t pauli_matrix_element(std::span<const complex_t> bra, std::span<const complex_t> ket,
                               PauliAxis axis, std::size_t qubit);
complex_t inner_product(std::span<const complex_t> bra, std::span<const complex_t> ket);
double squared_norm(std::span<const complex_t> amps);
} // namespace serial

namespace omp {
void apply_rx(std::span<complex_t> amps, std::size_t qubit, double angle);
void apply_rz(std::span<complex_t> amps, std::size_t qubit, double angle);
void apply_cnot(std::span<complex_t> amps, std::size_t control, std::size_t target);
void apply_pauli(std::span<complex_t> amps, PauliAxis axis, std::size_t qubit);
complex_t pauli_matrix_element(std::span<const complex_t> bra, std::span<const complex_t> ket,
                               PauliAxis axis, std::size_t qubit);
complex_t inner_product(std::span<const complex_t> bra, std::span<const complex_t> ket);
double squared_norm(std::span<const complex_t> amps);
} // namespace omp

} // namespace kernels
} // namespace qntk
