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
 * @file rng.hpp
 * Deterministic per-task random streams.
 *
 * A stream is identified by (master seed, stream id, index); its engine seed
 * is a splitmix64 mix of the three, so sample k of stream j is the same no
 * matter how many workers run or in which order tasks are scheduled.
 */
#pragma once

#include <complex>
#include <cstdint>
#include <random>

namespace qntk {

[[nodiscard]] std::uint64_t splitmix64(std::uint64_t x);

/// Engine seed for (master, stream, index).
[[nodiscard]] std::uint64_t derive_seed(std::uint64_t master, std::uint64_t stream,
                                        std::uint64_t index = 0);

class RngStream {
  public:
    explicit RngStream(std::uint64_t seed) : engine_{seed} {}
    RngStream(std::uint64_t master, std::uint64_t stream, std::uint64_t index = 0)
        : engine_{derive_seed(master, stream, index)} {}

    /// Uniform on [0, 1).
    double uniform() { return std::generate_canonical<double, 53>(engine_); }
    /// Uniform on [lo, hi).
    double uniform(double lo, double hi);
    /// Uniform integer on [0, bound).
    std::uint64_t below(std::uint64_t bound);
    double normal() { return normal_(engine_); }
    /// Standard complex Gaussian: independent N(0, 1/2) real and imaginary parts.
    std::complex<double> complex_normal();

    std::mt19937_64 &engine() { return engine_; }

  private:
    std::mt19937_64 engine_;
    std::normal_distribution<double> normal_{0.0, 1.0};
};

} // namespace qntk
