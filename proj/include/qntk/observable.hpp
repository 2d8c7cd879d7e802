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
 * @file observable.hpp
 * Loss observables: the global zero projector and single-site Paulis.
 */
#pragma once

#include <cstddef>
#include <string>
#include <string_view>

#include "qntk/statevector.hpp"

namespace qntk {

class Observable {
  public:
    enum class Kind { GlobalZeroProjector, LocalPauli };

    /// (|0><0|)^{\otimes n}
    static Observable zero_projector();
    static Observable pauli(PauliAxis axis, std::size_t site);

    [[nodiscard]] Kind kind() const { return kind_; }
    [[nodiscard]] PauliAxis axis() const { return axis_; }
    [[nodiscard]] std::size_t site() const { return site_; }

    /// tr[O^2] on an n-qubit register: 1 for the projector, 2^n for a Pauli.
    [[nodiscard]] double trace_of_square(std::size_t num_qubits) const;

    /// Operator norm; 1 for both kinds.
    [[nodiscard]] double operator_norm() const { return 1.0; }

    /// Replaces `state` with O|state>.
    void apply(Statevector &state) const;

    /// Short identifier used in CSV output: `zero_projector`, `pauli_y0`, ...
    [[nodiscard]] std::string name() const;
    static Observable from_name(std::string_view name);

    friend bool operator==(const Observable &, const Observable &) = default;

  private:
    Observable(Kind kind, PauliAxis axis, std::size_t site)
        : kind_{kind}, axis_{axis}, site_{site} {}

    Kind kind_;
    PauliAxis axis_;
    std::size_t site_;
};

/// <state|O|state>, without forming the 2^n x 2^n operator.
[[nodiscard]] double expectation(const Statevector &state, const Observable &obs);

} // namespace qntk
