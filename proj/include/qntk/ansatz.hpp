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
 * @file ansatz.hpp
 * Hardware-efficient variational circuit and the input encodings.
 */
#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "qntk/rng.hpp"
#include "qntk/statevector.hpp"

namespace qntk {

enum class GateKind { RotX, RotZ, CNOT };

struct Gate {
    GateKind kind;
    std::size_t qubit;      ///< rotation qubit, or CNOT control
    std::size_t target = 0; ///< CNOT only
    std::size_t param_slot = 0;

    [[nodiscard]] bool is_parametric() const { return kind != GateKind::CNOT; }
    friend bool operator==(const Gate &, const Gate &) = default;
};

enum class Entangler { Chain, Ring };

using ParamVector = std::vector<double>;

/**
 * @brief Layered circuit U(theta) with one parameter per rotation.
 *
 * Each block applies RotX(q) then RotZ(q) for q = 0..n-1, each with a fresh
 * parameter slot, followed by CNOT(q -> q+1) for q = 0..n-2 (plus
 * CNOT(n-1 -> 0) for the ring entangler when n >= 3). Blocks are repeated
 * d times, so the parameter count is 2nd.
 */
class ParamCircuit {
  public:
    static ParamCircuit build(std::size_t num_qubits, std::size_t num_blocks,
                              Entangler entangler = Entangler::Chain);

    [[nodiscard]] std::size_t num_qubits() const { return num_qubits_; }
    [[nodiscard]] std::size_t num_blocks() const { return num_blocks_; }
    [[nodiscard]] std::size_t param_count() const { return param_count_; }
    [[nodiscard]] const std::vector<Gate> &gates() const { return gates_; }

    friend bool operator==(const ParamCircuit &, const ParamCircuit &) = default;

  private:
    std::size_t num_qubits_ = 0;
    std::size_t num_blocks_ = 0;
    std::size_t param_count_ = 0;
    std::vector<Gate> gates_;
};

void apply_gate(Statevector &state, const Gate &gate, double angle);
/// Applies the inverse of `gate` at `angle`.
void apply_gate_adjoint(Statevector &state, const Gate &gate, double angle);

/// U(params)|input>, gates applied in listed order to a copy of `input`.
[[nodiscard]] Statevector run(const ParamCircuit &circuit, std::span<const double> params,
                              const Statevector &input);

void run_in_place(const ParamCircuit &circuit, std::span<const double> params, Statevector &state);

/// data / |data|, zero-padded to 2^num_qubits amplitudes.
[[nodiscard]] Statevector amplitude_encode(std::span<const complex_t> data, std::size_t num_qubits);
[[nodiscard]] Statevector amplitude_encode(std::span<const double> data, std::size_t num_qubits);
/// Uses the smallest register that holds `data` (at least one qubit).
[[nodiscard]] Statevector amplitude_encode(std::span<const double> data);

/// Normalized vector of i.i.d. complex Gaussians: a Haar-random pure state.
[[nodiscard]] Statevector sample_haar_state(std::size_t num_qubits, RngStream &rng);

/// Tensor product of independent single-qubit Haar states.
[[nodiscard]] Statevector sample_local_haar_state(std::size_t num_qubits, RngStream &rng);

/// param_count i.i.d. values uniform on [0, 2pi).
[[nodiscard]] ParamVector init_params(const ParamCircuit &circuit, RngStream &rng);

} // namespace qntk
