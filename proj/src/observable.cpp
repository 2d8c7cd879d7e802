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
#include "qntk/observable.hpp"

#include <cmath>
#include <stdexcept>

namespace qntk {

Observable Observable::zero_projector() {
    return {Kind::GlobalZeroProjector, PauliAxis::Z, 0};
}

Observable Observable::pauli(PauliAxis axis, std::size_t site) {
    return {Kind::LocalPauli, axis, site};
}

double Observable::trace_of_square(std::size_t num_qubits) const {
    if (kind_ == Kind::GlobalZeroProjector) {
        return 1.0;
    }
    return std::ldexp(1.0, static_cast<int>(num_qubits));
}

void Observable::apply(Statevector &state) const {
    if (kind_ == Kind::GlobalZeroProjector) {
        auto amps = state.amplitudes();
        for (std::size_t i = 1; i < amps.size(); ++i) {
            amps[i] = 0.0;
        }
        return;
    }
    state.apply_pauli(axis_, site_);
}

std::string Observable::name() const {
    if (kind_ == Kind::GlobalZeroProjector) {
        return "zero_projector";
    }
    const char axis = axis_ == PauliAxis::X ? 'x' : axis_ == PauliAxis::Y ? 'y' : 'z';
    return std::string("pauli_") + axis + std::to_string(site_);
}

Observable Observable::from_name(std::string_view name) {
    if (name == "zero_projector") {
        return zero_projector();
    }
    if (name.size() >= 8 && name.substr(0, 6) == "pauli_") {
        PauliAxis axis;
        switch (name[6]) {
        case 'x':
            axis = PauliAxis::X;
            break;
        case 'y':
            axis = PauliAxis::Y;
            break;
        case 'z':
            axis = PauliAxis::Z;
            break;
        default:
            throw std::invalid_argument("unknown observable '" + std::string(name) + "'");
        }
        const std::string digits(name.substr(7));
        if (digits.find_first_not_of("0123456789") == std::string::npos) {
            return pauli(axis, std::stoul(digits));
        }
    }
    throw std::invalid_argument("unknown observable '" + std::string(name) +
                                "' (expected zero_projector or pauli_<x|y|z><site>)");
}

double expectation(const Statevector &state, const Observable &obs) {
    if (obs.kind() == Observable::Kind::GlobalZeroProjector) {
        return std::norm(state[0]);
    }
    if (obs.site() >= state.num_qubits()) {
        throw std::invalid_argument("observable site " + std::to_string(obs.site()) +
                                    " out of range for " + std::to_string(state.num_qubits()) +
                                    " qubits");
    }
    return kernels::omp::pauli_matrix_element(state.amplitudes(), state.amplitudes(), obs.axis(),
                                              obs.site())
        .real();
}

} // namespace qntk
