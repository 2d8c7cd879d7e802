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
#include "qntk/statevector.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <utility>

namespace qntk {

namespace {
void check_size(std::size_t num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("qubit count must be in [1, " + std::to_string(kMaxQubits) +
                                    "], got " + std::to_string(num_qubits));
    }
}
} // namespace

Statevector::Statevector(std::size_t num_qubits) : num_qubits_{num_qubits} {
    check_size(num_qubits);
    amplitudes_.assign(std::size_t{1} << num_qubits, complex_t{0.0, 0.0});
    amplitudes_[0] = 1.0;
}

Statevector::Statevector(std::size_t num_qubits, std::vector<complex_t> amplitudes)
    : num_qubits_{num_qubits}, amplitudes_{std::move(amplitudes)} {}

Statevector Statevector::from_amplitudes(std::vector<complex_t> amplitudes) {
    const std::size_t dim = amplitudes.size();
    if (dim < 2 || !std::has_single_bit(dim)) {
        throw std::invalid_argument("amplitude count must be a power of two >= 2, got " +
                                    std::to_string(dim));
    }
    const auto n = static_cast<std::size_t>(std::countr_zero(dim));
    check_size(n);
    return {n, std::move(amplitudes)};
}

Statevector Statevector::basis_state(std::size_t num_qubits, std::size_t index) {
    check_size(num_qubits);
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (index >= dim) {
        throw std::invalid_argument("basis index " + std::to_string(index) + " out of range for " +
                                    std::to_string(num_qubits) + " qubits");
    }
    std::vector<complex_t> amps(dim, complex_t{0.0, 0.0});
    amps[index] = 1.0;
    return {num_qubits, std::move(amps)};
}

void Statevector::check_qubit(std::size_t qubit) const {
    if (qubit >= num_qubits_) {
        throw std::invalid_argument("qubit " + std::to_string(qubit) + " out of range for " +
                                    std::to_string(num_qubits_) + " qubits");
    }
}

void Statevector::apply_rx(std::size_t qubit, double angle) {
    check_qubit(qubit);
    kernels::omp::apply_rx(amplitudes_, qubit, angle);
}

void Statevector::apply_rz(std::size_t qubit, double angle) {
    check_qubit(qubit);
    kernels::omp::apply_rz(amplitudes_, qubit, angle);
}

void Statevector::apply_cnot(std::size_t control, std::size_t target) {
    check_qubit(control);
    check_qubit(target);
    if (control == target) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    kernels::omp::apply_cnot(amplitudes_, control, target);
}

void Statevector::apply_pauli(PauliAxis axis, std::size_t qubit) {
    check_qubit(qubit);
    kernels::omp::apply_pauli(amplitudes_, axis, qubit);
}

double Statevector::norm() const {
    return std::sqrt(kernels::omp::squared_norm(amplitudes_));
}

void Statevector::normalize() {
    const double nrm = norm();
    if (nrm == 0.0) {
        throw std::invalid_argument("cannot normalize the zero vector");
    }
    for (auto &a : amplitudes_) {
        a /= nrm;
    }
}

complex_t inner_product(const Statevector &a, const Statevector &b) {
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("inner product of statevectors with " +
                                    std::to_string(a.num_qubits()) + " and " +
                                    std::to_string(b.num_qubits()) + " qubits");
    }
    return kernels::omp::inner_product(a.amplitudes(), b.amplitudes());
}

} // namespace qntk
