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
 * @file expressibility.hpp
 * Trace-norm expressibility measures of encoding ensembles.
 *
 * For a fixed pure initial state the t-moment deviation only depends on the
 * encoded states, so every operator here lives on the t-replica state space
 * (dimension 2^n for t = 1, 4^n for t = 2):
 *
 *   M^[t] = || reference_t - E_x[(|x><x|)^{\otimes t}] ||_1
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

#include "qntk/haar.hpp"
#include "qntk/rng.hpp"
#include "qntk/statevector.hpp"

namespace qntk {

enum class Reference { GlobalHaar, LocalHaarProduct };

[[nodiscard]] std::string to_string(Reference ref);
[[nodiscard]] Reference reference_from_name(std::string_view name);

/// Draws one encoded state from an ensemble.
using StateSampler = std::function<Statevector(RngStream &)>;

/// Named ensembles: "singleton" (always |0...0>), "haar", "local_haar".
[[nodiscard]] StateSampler ensemble_sampler(std::string_view name, std::size_t num_qubits);

inline constexpr std::size_t kMaxMomentQubitsT1 = 12;
inline constexpr std::size_t kMaxMomentQubitsT2 = 5;

/// Sample mean of (|x><x|)^{\otimes t}; sample k draws from stream (seed, k).
[[nodiscard]] ComplexMatrix moment_operator(const StateSampler &sampler, int t,
                                            std::size_t num_qubits, std::size_t num_samples,
                                            std::uint64_t seed);

[[nodiscard]] ComplexMatrix reference_operator(Reference ref, int t, std::size_t num_qubits);

/// Sum of absolute eigenvalues of a Hermitian matrix.
[[nodiscard]] double trace_norm(const ComplexMatrix &hermitian);

struct ExpressibilityReport {
    std::size_t n = 0;
    int t = 1;
    Reference reference = Reference::GlobalHaar;
    double measure = 0.0;
    std::size_t num_samples = 0;
    std::size_t matrix_dim = 0;
};

[[nodiscard]] ExpressibilityReport measure(const StateSampler &sampler, Reference ref, int t,
                                           std::size_t num_qubits, std::size_t num_samples,
                                           std::uint64_t seed);

} // namespace qntk
