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
#include "qntk/expressibility.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "qntk/ansatz.hpp"

namespace qntk {

namespace {

constexpr std::size_t kSampleBlock = 256;

void check_dims(int t, std::size_t num_qubits) {
    if (t != 1 && t != 2) {
        throw std::invalid_argument("moment order must be 1 or 2, got " + std::to_string(t));
    }
    const std::size_t cap = t == 1 ? kMaxMomentQubitsT1 : kMaxMomentQubitsT2;
    if (num_qubits == 0 || num_qubits > cap) {
        throw std::length_error("t=" + std::to_string(t) + " moment operators support 1.." +
                                std::to_string(cap) + " qubits, got " + std::to_string(num_qubits));
    }
}

Eigen::VectorXcd replicate(const Statevector &x, int t) {
    const auto amps = x.amplitudes();
    const auto dim = static_cast<Eigen::Index>(amps.size());
    Eigen::Map<const Eigen::VectorXcd> v(amps.data(), dim);
    if (t == 1) {
        return v;
    }
    Eigen::VectorXcd out(dim * dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        out.segment(i * dim, dim) = v(i) * v;
    }
    return out;
}

} // namespace

std::string to_string(Reference ref) {
    return ref == Reference::GlobalHaar ? "global_haar" : "local_haar";
}

Reference reference_from_name(std::string_view name) {
    if (name == "global_haar" || name == "global") {
        return Reference::GlobalHaar;
    }
    if (name == "local_haar" || name == "local") {
        return Reference::LocalHaarProduct;
    }
    throw std::invalid_argument("unknown reference '" + std::string(name) +
                                "' (expected global_haar or local_haar)");
}

StateSampler ensemble_sampler(std::string_view name, std::size_t num_qubits) {
    if (name == "singleton") {
        return [num_qubits](RngStream &) { return Statevector(num_qubits); };
    }
    if (name == "haar") {
        return [num_qubits](RngStream &rng) { return sample_haar_state(num_qubits, rng); };
    }
    if (name == "local_haar") {
        return [num_qubits](RngStream &rng) { return sample_local_haar_state(num_qubits, rng); };
    }
    throw std::invalid_argument("unknown ensemble '" + std::string(name) +
                                "' (expected singleton, haar or local_haar)");
}

ComplexMatrix moment_operator(const StateSampler &sampler, int t, std::size_t num_qubits,
                              std::size_t num_samples, std::uint64_t seed) {
    check_dims(t, num_qubits);
    if (num_samples == 0) {
        throw std::invalid_argument("need at least one sample");
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    const auto len = static_cast<Eigen::Index>(t == 1 ? dim : dim * dim);
    ComplexMatrix acc = ComplexMatrix::Zero(len, len);
    for (std::size_t first = 0; first < num_samples; first += kSampleBlock) {
        const std::size_t cols = std::min(kSampleBlock, num_samples - first);
        ComplexMatrix block(len, static_cast<Eigen::Index>(cols));
        const auto ncols = static_cast<std::int64_t>(cols);
#pragma omp parallel for schedule(static) if (!omp_in_parallel())
        for (std::int64_t j = 0; j < ncols; ++j) {
            RngStream rng(seed, 0, first + static_cast<std::size_t>(j));
            const Statevector x = sampler(rng);
            if (x.num_qubits() != num_qubits) {
                // Exceptions cannot leave an OpenMP region; flag via NaN instead.
                block.col(j).setConstant(std::numeric_limits<double>::quiet_NaN());
                continue;
            }
            block.col(j) = replicate(x, t);
        }
        if (block.hasNaN()) {
            throw std::invalid_argument("sampler produced a state of the wrong size");
        }
        accumulate_outer_products(acc, block);
    }
    acc /= static_cast<double>(num_samples);
    return acc;
}

ComplexMatrix reference_operator(Reference ref, int t, std::size_t num_qubits) {
    check_dims(t, num_qubits);
    const auto dim = static_cast<Eigen::Index>(std::size_t{1} << num_qubits);
    if (t == 1) {
        return ComplexMatrix::Identity(dim, dim) / static_cast<double>(dim);
    }
    if (ref == Reference::LocalHaarProduct) {
        return local_moment2_reference(num_qubits);
    }
    // (I + SWAP) / (N (N + 1)) = 2 Pi_sym / (N (N + 1))
    const auto len = dim * dim;
    ComplexMatrix m = ComplexMatrix::Identity(len, len);
    for (Eigen::Index a = 0; a < dim; ++a) {
        for (Eigen::Index b = 0; b < dim; ++b) {
            m(a * dim + b, b * dim + a) += 1.0;
        }
    }
    m /= static_cast<double>(dim) * static_cast<double>(dim + 1);
    return m;
}

double trace_norm(const ComplexMatrix &hermitian) {
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> solver(hermitian, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("eigen-decomposition failed");
    }
    return solver.eigenvalues().cwiseAbs().sum();
}

ExpressibilityReport measure(const StateSampler &sampler, Reference ref, int t,
                             std::size_t num_qubits, std::size_t num_samples, std::uint64_t seed) {
    const ComplexMatrix ref_op = reference_operator(ref, t, num_qubits);
    const ComplexMatrix moment = moment_operator(sampler, t, num_qubits, num_samples, seed);
    ExpressibilityReport report;
    report.n = num_qubits;
    report.t = t;
    report.reference = ref;
    report.measure = trace_norm(ref_op - moment);
    report.num_samples = num_samples;
    report.matrix_dim = static_cast<std::size_t>(ref_op.rows());
    return report;
}

} // namespace qntk
