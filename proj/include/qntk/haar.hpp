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
 * @file haar.hpp
 * Haar-random unitaries and exact first/second Haar moments.
 *
 * Moment tensors are stored as Hermitian matrices over multi-indices:
 *
 *   t = 1:  M[(l0,r0),(l0',r0')]             = E[U_{l0 r0} conj(U_{l0' r0'})]
 *   t = 2:  M[(l0,r0,l1,r1),(l0',r0',l1',r1')]
 *                       = E[U_{l0 r0} U_{l1 r1} conj(U_{l0' r0'}) conj(U_{l1' r1'})]
 *
 * with the leftmost index most significant.
 */
#pragma once

#include <cstddef>
#include <cstdint>

#include <Eigen/Dense>

#include "qntk/rng.hpp"
#include "qntk/statevector.hpp"

namespace qntk {

using ComplexMatrix = Eigen::MatrixXcd;

/// QR of a complex Gaussian matrix with the R-diagonal phase fix.
[[nodiscard]] ComplexMatrix haar_unitary(std::size_t dim, RngStream &rng);

class MomentTensor1 {
  public:
    MomentTensor1(std::size_t dim, ComplexMatrix entries);
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] complex_t operator()(std::size_t l0, std::size_t r0, std::size_t l0p,
                                       std::size_t r0p) const;
    [[nodiscard]] const ComplexMatrix &matrix() const { return entries_; }

  private:
    std::size_t dim_;
    ComplexMatrix entries_;
};

class MomentTensor2 {
  public:
    MomentTensor2(std::size_t dim, ComplexMatrix entries);
    [[nodiscard]] std::size_t dim() const { return dim_; }
    [[nodiscard]] complex_t operator()(std::size_t l0, std::size_t r0, std::size_t l1,
                                       std::size_t r1, std::size_t l0p, std::size_t r0p,
                                       std::size_t l1p, std::size_t r1p) const;
    [[nodiscard]] const ComplexMatrix &matrix() const { return entries_; }

  private:
    std::size_t dim_;
    ComplexMatrix entries_;
};

/// (1/N) d(l0,l0') d(r0,r0')
[[nodiscard]] MomentTensor1 weingarten_moment1(std::size_t dim);

/// Four-delta-pattern Weingarten formula; requires dim >= 2.
[[nodiscard]] MomentTensor2 weingarten_moment2(std::size_t dim);

/// Default cap on stored tensor entries for the Monte-Carlo estimators.
inline constexpr std::size_t kDefaultEntryBudget = std::size_t{1} << 20;

/**
 * Monte-Carlo estimates over `num_samples` Haar unitaries. Sample k uses the
 * stream (seed, k), so results do not depend on the worker count.
 * Throws std::length_error when the tensor exceeds `entry_budget` entries.
 */
[[nodiscard]] MomentTensor1 empirical_moment1(std::size_t dim, std::size_t num_samples,
                                              std::uint64_t seed,
                                              std::size_t entry_budget = kDefaultEntryBudget);
[[nodiscard]] MomentTensor2 empirical_moment2(std::size_t dim, std::size_t num_samples,
                                              std::uint64_t seed,
                                              std::size_t entry_budget = kDefaultEntryBudget);

/// Largest register accepted by local_moment2_reference.
inline constexpr std::size_t kMaxLocalMomentQubits = 5;

/**
 * E over products of single-qubit Haar unitaries of (W|0><0|W^dag)^{\otimes 2},
 * i.e. the tensor product over qubits of (I_4 + SWAP)/6. Rows and columns
 * are indexed a1 * 2^n + a2 (replica one most significant).
 */
[[nodiscard]] ComplexMatrix local_moment2_reference(std::size_t num_qubits);

/// Accumulates sum_k v_k v_k^dag over the columns of `block` into `acc`.
void accumulate_outer_products(ComplexMatrix &acc, const ComplexMatrix &block);

} // namespace qntk
