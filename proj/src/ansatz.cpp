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
#include "qntk/ansatz.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace qntk {

ParamCircuit ParamCircuit::build(std::size_t num_qubits, std::size_t num_blocks,
                                 Entangler entangler) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("circuit qubit count must be in [1, " +
                                    std::to_string(kMaxQubits) + "]");
    }
    if (num_blocks == 0) {
        throw std::invalid_argument("circuit needs at least one block");
    }
    ParamCircuit c;
    c.num_qubits_ = num_qubits;
    c.num_blocks_ = num_blocks;
    std::size_t slot = 0;
    for (std::size_t block = 0; block < num_blocks; ++block) {
        for (std::size_t q = 0; q < num_qubits; ++q) {
            c.gates_.push_back({GateKind::RotX, q, 0, slot++});
            c.gates_.push_back({GateKind::RotZ, q, 0, slot++});
        }
        for (std::size_t q = 0; q + 1 < num_qubits; ++q) {
            c.gates_.push_back({GateKind::CNOT, q, q + 1, 0});
        }
        if (entangler == Entangler::Ring && num_qubits >= 3) {
            c.gates_.push_back({GateKind::CNOT, num_qubits - 1, 0, 0});
        }
    }
    c.param_count_ = slot;
    return c;
}

void apply_gate(Statevector &state, const Gate &gate, double angle) {
    switch (gate.kind) {
    case GateKind::RotX:
        state.apply_rx(gate.qubit, angle);
        break;
    case GateKind::RotZ:
        state.apply_rz(gate.qubit, angle);
        break;
    case GateKind::CNOT:
        state.apply_cnot(gate.qubit, gate.target);
        break;
    }
}

void apply_gate_adjoint(Statevector &state, const Gate &gate, double angle) {
    apply_gate(state, gate, -angle);
}

void run_in_place(const ParamCircuit &circuit, std::span<const double> params, Statevector &state) {
    if (params.size() != circuit.param_count()) {
        throw std::invalid_argument("expected " + std::to_string(circuit.param_count()) +
                                    " parameters, got " + std::to_string(params.size()));
    }
    if (state.num_qubits() != circuit.num_qubits()) {
        throw std::invalid_argument("circuit acts on " + std::to_string(circuit.num_qubits()) +
                                    " qubits but the input has " +
                                    std::to_string(state.num_qubits()));
    }
    for (const Gate &g : circuit.gates()) {
        apply_gate(state, g, g.is_parametric() ? params[g.param_slot] : 0.0);
    }
}

Statevector run(const ParamCircuit &circuit, std::span<const double> params,
                const Statevector &input) {
    Statevector out = input;
    run_in_place(circuit, params, out);
    return out;
}

Statevector amplitude_encode(std::span<const complex_t> data, std::size_t num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxQubits) {
        throw std::invalid_argument("encoding register must have 1.." + std::to_string(kMaxQubits) +
                                    " qubits");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    if (data.size() > dim) {
        throw std::invalid_argument("data of length " + std::to_string(data.size()) +
                                    " does not fit in " + std::to_string(num_qubits) + " qubits");
    }
    double sq = 0.0;
    for (const auto &v : data) {
        sq += std::norm(v);
    }
    if (!(sq > 0.0)) {
        throw std::invalid_argument("cannot amplitude-encode a zero-norm vector");
    }
    const double nrm = std::sqrt(sq);
    std::vector<complex_t> amps(dim, complex_t{0.0, 0.0});
    for (std::size_t i = 0; i < data.size(); ++i) {
        amps[i] = data[i] / nrm;
    }
    return Statevector::from_amplitudes(std::move(amps));
}

Statevector amplitude_encode(std::span<const double> data, std::size_t num_qubits) {
    std::vector<complex_t> cdata(data.begin(), data.end());
    return amplitude_encode(std::span<const complex_t>(cdata), num_qubits);
}

Statevector amplitude_encode(std::span<const double> data) {
    const std::size_t dim = std::bit_ceil(std::max<std::size_t>(data.size(), 2));
    return amplitude_encode(data, static_cast<std::size_t>(std::countr_zero(dim)));
}

Statevector sample_haar_state(std::size_t num_qubits, RngStream &rng) {
    Statevector state(num_qubits);
    for (auto &a : state.amplitudes()) {
        a = rng.complex_normal();
    }
    state.normalize();
    return state;
}

Statevector sample_local_haar_state(std::size_t num_qubits, RngStream &rng) {
    Statevector state(num_qubits);
    auto amps = state.amplitudes();
    amps[0] = 1.0;
    // Build the product qubit by qubit: after step q the first 2^{q+1}
    // amplitudes hold the state of qubits 0..q.
    for (std::size_t q = 0; q < num_qubits; ++q) {
        complex_t v0 = rng.complex_normal();
        complex_t v1 = rng.complex_normal();
        const double nrm = std::sqrt(std::norm(v0) + std::norm(v1));
        v0 /= nrm;
        v1 /= nrm;
        const std::size_t width = std::size_t{1} << q;
        for (std::size_t i = 0; i < width; ++i) {
            amps[i + width] = amps[i] * v1;
            amps[i] *= v0;
        }
    }
    return state;
}

ParamVector init_params(const ParamCircuit &circuit, RngStream &rng) {
    ParamVector params(circuit.param_count());
    for (auto &p : params) {
        p = rng.uniform(0.0, 2 * std::numbers::pi);
    }
    return params;
}

} // namespace qntk
