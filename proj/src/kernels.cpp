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
#include "qntk/kernels.hpp"

#include <cmath>
#include <cstdint>

#include <omp.h>

namespace qntk::kernels {

namespace {

using index_t = std::int64_t;

/// Index of the k-th amplitude whose bit `qubit` is zero.
inline std::size_t insert_zero_bit(std::size_t k, std::size_t qubit) {
    const std::size_t low = k & ((std::size_t{1} << qubit) - 1);
    return ((k >> qubit) << (qubit + 1)) | low;
}

inline bool go_parallel(std::size_t dim) {
    return dim >= kParallelThreshold && !omp_in_parallel();
}

inline complex_t rx_lo(complex_t a0, complex_t a1, double c, double s) {
    return {c * a0.real() + s * a1.imag(), c * a0.imag() - s * a1.real()};
}

} // namespace

// R_x(t) = [[c, -is], [-is, c]] with c = cos(t/2), s = sin(t/2).
// R_z(t) = diag(e^{-it/2}, e^{it/2}).

namespace serial {

void apply_rx(std::span<complex_t> amps, std::size_t qubit, double angle) {
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    const std::size_t stride = std::size_t{1} << qubit;
    const std::size_t half = amps.size() / 2;
    for (std::size_t k = 0; k < half; ++k) {
        const std::size_t i0 = insert_zero_bit(k, qubit);
        const complex_t a0 = amps[i0];
        const complex_t a1 = amps[i0 + stride];
        amps[i0] = rx_lo(a0, a1, c, s);
        amps[i0 + stride] = rx_lo(a1, a0, c, s);
    }
}

void apply_rz(std::span<complex_t> amps, std::size_t qubit, double angle) {
    const complex_t phase0 = std::polar(1.0, -angle / 2);
    const complex_t phase1 = std::conj(phase0);
    for (std::size_t i = 0; i < amps.size(); ++i) {
        amps[i] *= ((i >> qubit) & 1U) ? phase1 : phase0;
    }
}

void apply_cnot(std::span<complex_t> amps, std::size_t control, std::size_t target) {
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if ((i & cmask) && !(i & tmask)) {
            std::swap(amps[i], amps[i | tmask]);
        }
    }
}

void apply_pauli(std::span<complex_t> amps, PauliAxis axis, std::size_t qubit) {
    const std::size_t mask = std::size_t{1} << qubit;
    const complex_t i_unit{0.0, 1.0};
    for (std::size_t i = 0; i < amps.size(); ++i) {
        if (i & mask) {
            continue;
        }
        complex_t &a0 = amps[i];
        complex_t &a1 = amps[i | mask];
        switch (axis) {
        case PauliAxis::X:
            std::swap(a0, a1);
            break;
        case PauliAxis::Y: {
            const complex_t t0 = a0;
            a0 = -i_unit * a1;
            a1 = i_unit * t0;
            break;
        }
        case PauliAxis::Z:
            a1 = -a1;
            break;
        }
    }
}

complex_t pauli_matrix_element(std::span<const complex_t> bra, std::span<const complex_t> ket,
                               PauliAxis axis, std::size_t qubit) {
    const std::size_t mask = std::size_t{1} << qubit;
    complex_t acc{0.0, 0.0};
    for (std::size_t i = 0; i < bra.size(); ++i) {
        const bool bit = (i & mask) != 0;
        switch (axis) {
        case PauliAxis::X:
            acc += std::conj(bra[i]) * ket[i ^ mask];
            break;
        case PauliAxis::Y:
            // (Y|k>)_i = -i k_{i^m} if bit(i)==0, +i k_{i^m} otherwise
            acc += std::conj(bra[i]) * ket[i ^ mask] * (bit ? complex_t{0, 1} : complex_t{0, -1});
            break;
        case PauliAxis::Z:
            acc += std::conj(bra[i]) * ket[i] * (bit ? -1.0 : 1.0);
            break;
        }
    }
    return acc;
}

complex_t inner_product(std::span<const complex_t> bra, std::span<const complex_t> ket) {
    complex_t acc{0.0, 0.0};
    for (std::size_t i = 0; i < bra.size(); ++i) {
        acc += std::conj(bra[i]) * ket[i];
    }
    return acc;
}

double squared_norm(std::span<const complex_t> amps) {
    double acc = 0.0;
    for (const auto &a : amps) {
        acc += std::norm(a);
    }
    return acc;
}

} // namespace serial

namespace omp {

namespace {

template <class Body> void for_each_index(index_t count, std::size_t dim, Body &&body) {
    if (go_parallel(dim)) {
#pragma omp parallel for schedule(static)
        for (index_t k = 0; k < count; ++k) {
            body(static_cast<std::size_t>(k));
        }
    } else {
        for (index_t k = 0; k < count; ++k) {
            body(static_cast<std::size_t>(k));
        }
    }
}

template <class Term> complex_t sum_over_index(index_t count, std::size_t dim, Term &&term) {
    double re = 0.0;
    double im = 0.0;
    if (go_parallel(dim)) {
#pragma omp parallel for schedule(static) reduction(+ : re, im)
        for (index_t k = 0; k < count; ++k) {
            const complex_t t = term(static_cast<std::size_t>(k));
            re += t.real();
            im += t.imag();
        }
    } else {
        for (index_t k = 0; k < count; ++k) {
            const complex_t t = term(static_cast<std::size_t>(k));
            re += t.real();
            im += t.imag();
        }
    }
    return {re, im};
}

} // namespace

void apply_rx(std::span<complex_t> amps, std::size_t qubit, double angle) {
    const double c = std::cos(angle / 2);
    const double s = std::sin(angle / 2);
    const std::size_t stride = std::size_t{1} << qubit;
    complex_t *data = amps.data();
    for_each_index(static_cast<index_t>(amps.size() / 2), amps.size(), [=](std::size_t k) {
        const std::size_t i0 = insert_zero_bit(k, qubit);
        const complex_t a0 = data[i0];
        const complex_t a1 = data[i0 + stride];
        data[i0] = rx_lo(a0, a1, c, s);
        data[i0 + stride] = rx_lo(a1, a0, c, s);
    });
}

void apply_rz(std::span<complex_t> amps, std::size_t qubit, double angle) {
    const complex_t phase0 = std::polar(1.0, -angle / 2);
    const complex_t phase1 = std::conj(phase0);
    const std::size_t stride = std::size_t{1} << qubit;
    complex_t *data = amps.data();
    for_each_index(static_cast<index_t>(amps.size() / 2), amps.size(), [=](std::size_t k) {
        const std::size_t i0 = insert_zero_bit(k, qubit);
        data[i0] *= phase0;
        data[i0 + stride] *= phase1;
    });
}

void apply_cnot(std::span<complex_t> amps, std::size_t control, std::size_t target) {
    // Enumerate indices with control=1, target=0 by inserting two zero bits.
    const std::size_t lo = control < target ? control : target;
    const std::size_t hi = control < target ? target : control;
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    complex_t *data = amps.data();
    for_each_index(static_cast<index_t>(amps.size() / 4), amps.size(), [=](std::size_t k) {
        const std::size_t base = insert_zero_bit(insert_zero_bit(k, lo), hi);
        std::swap(data[base | cmask], data[base | cmask | tmask]);
    });
}

void apply_pauli(std::span<complex_t> amps, PauliAxis axis, std::size_t qubit) {
    const std::size_t stride = std::size_t{1} << qubit;
    complex_t *data = amps.data();
    const auto half = static_cast<index_t>(amps.size() / 2);
    switch (axis) {
    case PauliAxis::X:
        for_each_index(half, amps.size(), [=](std::size_t k) {
            const std::size_t i0 = insert_zero_bit(k, qubit);
            std::swap(data[i0], data[i0 + stride]);
        });
        break;
    case PauliAxis::Y:
        for_each_index(half, amps.size(), [=](std::size_t k) {
            const std::size_t i0 = insert_zero_bit(k, qubit);
            const complex_t a0 = data[i0];
            const complex_t a1 = data[i0 + stride];
            data[i0] = {a1.imag(), -a1.real()};
            data[i0 + stride] = {-a0.imag(), a0.real()};
        });
        break;
    case PauliAxis::Z:
        for_each_index(half, amps.size(), [=](std::size_t k) {
            const std::size_t i1 = insert_zero_bit(k, qubit) + stride;
            data[i1] = -data[i1];
        });
        break;
    }
}

complex_t pauli_matrix_element(std::span<const complex_t> bra, std::span<const complex_t> ket,
                               PauliAxis axis, std::size_t qubit) {
    const std::size_t stride = std::size_t{1} << qubit;
    const auto half = static_cast<index_t>(bra.size() / 2);
    const complex_t *b = bra.data();
    const complex_t *v = ket.data();
    switch (axis) {
    case PauliAxis::X:
        return sum_over_index(half, bra.size(), [=](std::size_t k) {
            const std::size_t i0 = insert_zero_bit(k, qubit);
            const std::size_t i1 = i0 + stride;
            return std::conj(b[i0]) * v[i1] + std::conj(b[i1]) * v[i0];
        });
    case PauliAxis::Y:
        // <b|Y|v> = sum -i conj(b0) v1 + i conj(b1) v0
        return sum_over_index(half, bra.size(), [=](std::size_t k) {
            const std::size_t i0 = insert_zero_bit(k, qubit);
            const std::size_t i1 = i0 + stride;
            const complex_t d = std::conj(b[i1]) * v[i0] - std::conj(b[i0]) * v[i1];
            return complex_t{-d.imag(), d.real()};
        });
    case PauliAxis::Z:
        break;
    }
    return sum_over_index(half, bra.size(), [=](std::size_t k) {
        const std::size_t i0 = insert_zero_bit(k, qubit);
        const std::size_t i1 = i0 + stride;
        return std::conj(b[i0]) * v[i0] - std::conj(b[i1]) * v[i1];
    });
}

complex_t inner_product(std::span<const complex_t> bra, std::span<const complex_t> ket) {
    const complex_t *b = bra.data();
    const complex_t *v = ket.data();
    return sum_over_index(static_cast<index_t>(bra.size()), bra.size(),
                          [=](std::size_t i) { return std::conj(b[i]) * v[i]; });
}

double squared_norm(std::span<const complex_t> amps) {
    const complex_t *data = amps.data();
    return sum_over_index(static_cast<index_t>(amps.size()), amps.size(),
                          [=](std::size_t i) { return complex_t{std::norm(data[i]), 0.0}; })
        .real();
}

} // namespace omp

} // namespace qntk::kernels
