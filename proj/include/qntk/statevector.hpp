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
 * @file statevector.hpp
 * Dense complex statevector with in-place gate application.
 */
#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "qntk/kernels.hpp"

namespace qntk {

/// Largest register the simulator accepts.
inline constexpr std::size_t kMaxQubits = 14;

/**
 * @brief Amplitude vector over `num_qubits` qubits.
 *
 * Qubit 0 is the least significant bit of the amplitude index. Gate methods
 * mutate in place and validate their qubit arguments, throwing
 * std::invalid_argument on misuse.
 */
class Statevector {
  public:
    /// |0...0> on `num_qubits` qubits.
    explicit Statevector(std::size_t num_qubits);

    /// Wraps `amplitudes` as-is (no normalization). Length must be 2^n, n >= 1.
    static Statevector from_amplitudes(std::vector<complex_t> amplitudes);

    static Statevector basis_state(std::size_t num_qubits, std::size_t index);

    [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
    [[nodiscard]] std::size_t dimension() const { return amplitudes_.size(); }
    [[nodiscard]] std::span<const complex_t> amplitudes() const { return amplitudes_; }
    [[nodiscard]] std::span<complex_t> amplitudes() { return amplitudes_; }
    [[nodiscard]] complex_t operator[](std::size_t i) const { return amplitudes_[i]; }

    /// exp(-i angle X/2)
    void apply_rx(std::size_t qubit, double angle);
    /// exp(-i angle Z/2)
    void apply_rz(std::size_t qubit, double angle);
    void apply_cnot(std::size_t control, std::size_t target);
    void apply_pauli(PauliAxis axis, std::size_t qubit);

    [[nodiscard]] double norm() const;
    void normalize();

    friend bool operator==(const Statevector &, const Statevector &) = default;

  private:
    Statevector(std::size_t num_qubits, std::vector<complex_t> amplitudes);
    void check_qubit(std::size_t qubit) const;

    std::size_t num_qubits_;
    std::vector<complex_t> amplitudes_;
};

/// <a|b>, conjugate-linear in `a`.
[[nodiscard]] complex_t inner_product(const Statevector &a, const Statevector &b);

} // namespace qntk
