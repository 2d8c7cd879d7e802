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
#include "qntk/haar.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <omp.h>

namespace qntk {

namespace {

constexpr std::size_t kSampleBlock = 512;

std::size_t ipow(std::size_t base, unsigned exp) {
    std::size_t r = 1;
    while (exp-- > 0) {
        r *= base;
    }
    return r;
}

void check_budget(std::size_t entries, std::size_t budget) {
    if (entries > budget) {
        throw std::length_error("moment tensor needs " + std::to_string(entries) +
                                " entries, over the budget of " + std::to_string(budget));
    }
}

/// Fills column j of `block` with feature(haar_unitary) for samples
/// [first, first + cols).
template <class Feature>
void fill_block(ComplexMatrix &block, std::size_t dim, std::size_t first, std::uint64_t seed,
                Feature feature) {
    const auto cols = static_cast<std::int64_t>(block.cols());
#pragma omp parallel for schedule(static) if (!omp_in_parallel())
    for (std::int64_t j = 0; j < cols; ++j) {
        RngStream rng(seed, 0, first + static_cast<std::size_t>(j));
        const ComplexMatrix u = haar_unitary(dim, rng);
        block.col(j) = feature(u);
    }
}

/// vec(U) with index l * N + r.
Eigen::VectorXcd flatten(const ComplexMatrix &u) {
    const auto n = u.rows();
    Eigen::VectorXcd v(n * n);
    for (Eigen::Index l = 0; l < n; ++l) {
        for (Eigen::Index r = 0; r < n; ++r) {
            v(l * n + r) = u(l, r);
        }
    }
    return v;
}

Eigen::VectorXcd kron(const Eigen::VectorXcd &a, const Eigen::VectorXcd &b) {
    Eigen::VectorXcd out(a.size() * b.size());
    for (Eigen::Index i = 0; i < a.size(); ++i) {
        out.segment(i * b.size(), b.size()) = a(i) * b;
    }
    return out;
}

template <class Feature>
ComplexMatrix estimate(std::size_t dim, std::size_t feature_len, std::size_t num_samples,
                       std::uint64_t seed, Feature feature) {
    if (num_samples == 0) {
        throw std::invalid_argument("need at least one sample");
    }
    const auto len = static_cast<Eigen::Index>(feature_len);
    ComplexMatrix acc = ComplexMatrix::Zero(len, len);
    for (std::size_t first = 0; first < num_samples; first += kSampleBlock) {
        const std::size_t cols = std::min(kSampleBlock, num_samples - first);
        ComplexMatrix block(len, static_cast<Eigen::Index>(cols));
        fill_block(block, dim, first, seed, feature);
        accumulate_outer_products(acc, block);
    }
    acc /= static_cast<double>(num_samples);
    return acc;
}

} // namespace

ComplexMatrix haar_unitary(std::size_t dim, RngStream &rng) {
    if (dim == 0) {
        throw std::invalid_argument("unitary dimension must be positive");
    }
    const auto n = static_cast<Eigen::Index>(dim);
    ComplexMatrix z(n, n);
    for (Eigen::Index j = 0; j < n; ++j) {
        for (Eigen::Index i = 0; i < n; ++i) {
            z(i, j) = rng.complex_normal();
        }
    }
    Eigen::HouseholderQR<ComplexMatrix> qr(z);
    ComplexMatrix q = qr.householderQ() * ComplexMatrix::Identity(n, n);
    const ComplexMatrix &r = qr.matrixQR();
    // Q Lambda with Lambda_jj = R_jj / |R_jj| makes the factorization unique
    // (positive R diagonal), which is what makes Q Haar distributed.
    for (Eigen::Index j = 0; j < n; ++j) {
        const complex_t rjj = r(j, j);
        const double mag = std::abs(rjj);
        q.col(j) *= mag > 0.0 ? rjj / mag : complex_t{1.0, 0.0};
    }
    return q;
}

void accumulate_outer_products(ComplexMatrix &acc, const ComplexMatrix &block) {
    acc.noalias() += block * block.adjoint();
}

MomentTensor1::MomentTensor1(std::size_t dim, ComplexMatrix entries)
    : dim_{dim}, entries_{std::move(entries)} {}

complex_t MomentTensor1::operator()(std::size_t l0, std::size_t r0, std::size_t l0p,
                                    std::size_t r0p) const {
    const std::size_t n = dim_;
    return entries_(static_cast<Eigen::Index>(l0 * n + r0),
                    static_cast<Eigen::Index>(l0p * n + r0p));
}

MomentTensor2::MomentTensor2(std::size_t dim, ComplexMatrix entries)
    : dim_{dim}, entries_{std::move(entries)} {}

complex_t MomentTensor2::operator()(std::size_t l0, std::size_t r0, std::size_t l1, std::size_t r1,
                                    std::size_t l0p, std::size_t r0p, std::size_t l1p,
                                    std::size_t r1p) const {
    const std::size_t n = dim_;
    const std::size_t row = ((l0 * n + r0) * n + l1) * n + r1;
    const std::size_t col = ((l0p * n + r0p) * n + l1p) * n + r1p;
    return entries_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
}

MomentTensor1 weingarten_moment1(std::size_t dim) {
    if (dim == 0) {
        throw std::invalid_argument("dimension must be positive");
    }
    const auto len = static_cast<Eigen::Index>(dim * dim);
    ComplexMatrix m = ComplexMatrix::Identity(len, len) / static_cast<double>(dim);
    return {dim, std::move(m)};
}

MomentTensor2 weingarten_moment2(std::size_t dim) {
    if (dim < 2) {
        throw std::invalid_argument("second Haar moment needs dimension >= 2");
    }
    const std::size_t n = dim;
    const double nd = static_cast<double>(n);
    const double same = 1.0 / (nd * nd - 1.0);
    const double cross = 1.0 / (nd * (nd * nd - 1.0));
    const std::size_t len = n * n * n * n;
    ComplexMatrix m =
        ComplexMatrix::Zero(static_cast<Eigen::Index>(len), static_cast<Eigen::Index>(len));
    // Only index tuples where the left legs and right legs each pair up
    // contribute, so enumerate the pairings instead of all N^8 entries.
    for (std::size_t l0 = 0; l0 < n; ++l0)
        for (std::size_t l1 = 0; l1 < n; ++l1)
            for (std::size_t r0 = 0; r0 < n; ++r0)
                for (std::size_t r1 = 0; r1 < n; ++r1) {
                    const std::size_t row = ((l0 * n + r0) * n + l1) * n + r1;
                    auto add = [&](std::size_t l0p, std::size_t r0p, std::size_t l1p,
                                   std::size_t r1p) {
                        const std::size_t col = ((l0p * n + r0p) * n + l1p) * n + r1p;
                        const bool ll = l0 == l0p && l1 == l1p;
                        const bool lx = l0 == l1p && l1 == l0p;
                        const bool rr = r0 == r0p && r1 == r1p;
                        const bool rx = r0 == r1p && r1 == r0p;
                        double v = 0.0;
                        if (ll && rr)
                            v += same;
                        if (lx && rx)
                            v += same;
                        if (ll && rx)
                            v -= cross;
                        if (lx && rr)
                            v -= cross;
                        m(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = v;
                    };
                    add(l0, r0, l1, r1);
                    add(l0, r1, l1, r0);
                    add(l1, r0, l0, r1);
                    add(l1, r1, l0, r0);
                }
    return {dim, std::move(m)};
}

MomentTensor1 empirical_moment1(std::size_t dim, std::size_t num_samples, std::uint64_t seed,
                                std::size_t entry_budget) {
    check_budget(ipow(dim, 4), entry_budget);
    return {dim, estimate(dim, dim * dim, num_samples, seed,
                          [](const ComplexMatrix &u) { return flatten(u); })};
}

MomentTensor2 empirical_moment2(std::size_t dim, std::size_t num_samples, std::uint64_t seed,
                                std::size_t entry_budget) {
    check_budget(ipow(dim, 8), entry_budget);
    return {dim, estimate(dim, ipow(dim, 4), num_samples, seed, [](const ComplexMatrix &u) {
                const Eigen::VectorXcd v = flatten(u);
                return kron(v, v);
            })};
}

ComplexMatrix local_moment2_reference(std::size_t num_qubits) {
    if (num_qubits == 0 || num_qubits > kMaxLocalMomentQubits) {
        throw std::length_error("local 2-moment reference supports 1.." +
                                std::to_string(kMaxLocalMomentQubits) + " qubits, got " +
                                std::to_string(num_qubits));
    }
    const std::size_t dim = std::size_t{1} << num_qubits;
    const auto len = static_cast<Eigen::Index>(dim * dim);
    ComplexMatrix m = ComplexMatrix::Zero(len, len);
    const double scale = std::pow(6.0, -static_cast<double>(num_qubits));
    // Per qubit, (I + SWAP) on (a1, a2; b1, b2) is d(a1,b1)d(a2,b2) + d(a1,b2)d(a2,b1):
    // 2 when all four bits agree, 1 when {a1,a2} = {b1,b2} as distinct bits, else 0.
    for (std::size_t a1 = 0; a1 < dim; ++a1)
        for (std::size_t a2 = 0; a2 < dim; ++a2)
            for (std::size_t b1 = 0; b1 < dim; ++b1)
                for (std::size_t b2 = 0; b2 < dim; ++b2) {
                    double v = scale;
                    for (std::size_t q = 0; q < num_qubits && v != 0.0; ++q) {
                        const auto x1 = (a1 >> q) & 1U, x2 = (a2 >> q) & 1U;
                        const auto y1 = (b1 >> q) & 1U, y2 = (b2 >> q) & 1U;
                        const int f = (x1 == y1 && x2 == y2) + (x1 == y2 && x2 == y1);
                        v *= f;
                    }
                    if (v != 0.0) {
                        m(static_cast<Eigen::Index>(a1 * dim + a2),
                          static_cast<Eigen::Index>(b1 * dim + b2)) = v;
                    }
                }
    return m;
}

} // namespace qntk
