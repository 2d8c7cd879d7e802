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

#include <cmath>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>

#include "catch_amalgamated.hpp"

#include "qntk/haar.hpp"

using namespace qntk;
using Catch::Approx;

namespace {

double max_abs(const ComplexMatrix &m) {
    return m.cwiseAbs().maxCoeff();
}

/// Independent oracle: the four-delta second-moment formula written per entry.
complex_t moment2_oracle(std::size_t n, std::size_t l0, std::size_t r0, std::size_t l1,
                         std::size_t r1, std::size_t a0, std::size_t b0, std::size_t a1,
                         std::size_t b1) {
    const double nn = static_cast<double>(n);
    auto d = [](std::size_t a, std::size_t b) { return a == b ? 1.0 : 0.0; };
    const double same = d(l0, a0) * d(l1, a1) * d(r0, b0) * d(r1, b1) +
                        d(l0, a1) * d(l1, a0) * d(r0, b1) * d(r1, b0);
    const double cross = d(l0, a0) * d(l1, a1) * d(r0, b1) * d(r1, b0) +
                         d(l0, a1) * d(l1, a0) * d(r0, b0) * d(r1, b1);
    return {(same - cross / nn) / (nn * nn - 1.0), 0.0};
}

} // namespace

TEST_CASE("haar_unitary is unitary", "[haar]") {
    RngStream rng{1};
    for (std::size_t n = 1; n <= 8; ++n) {
        const auto u = haar_unitary(n, rng);
        const auto id =
            ComplexMatrix::Identity(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
        CHECK(max_abs(u.adjoint() * u - id) <= 1e-12);
        CHECK(max_abs(u * u.adjoint() - id) <= 1e-12);
    }
    REQUIRE_THROWS_AS(haar_unitary(0, rng), std::invalid_argument);
}

TEST_CASE("haar_unitary entries carry no phase bias", "[haar][statistical]") {
    // A QR factorization without the diagonal phase fix leaves E[U_00] != 0.
    constexpr int kSamples = 20000;
    RngStream rng{2};
    std::vector<double> re, im;
    for (int k = 0; k < kSamples; ++k) {
        const auto u = haar_unitary(3, rng);
        re.push_back(u(0, 0).real());
        im.push_back(u(0, 0).imag());
    }
    for (const auto *v : {&re, &im}) {
        double m = 0.0, s = 0.0;
        for (double x : *v) {
            m += x;
        }
        m /= kSamples;
        for (double x : *v) {
            s += (x - m) * (x - m);
        }
        const double se = std::sqrt(s / (kSamples - 1) / kSamples);
        CHECK(std::abs(m) <= 3 * se);
    }
}

TEST_CASE("First moment is invariant under a fixed left rotation", "[haar][statistical]") {
    constexpr int kSamples = 20000;
    constexpr std::size_t kDim = 2;
    RngStream fixed{8};
    const ComplexMatrix v = haar_unitary(kDim, fixed);
    const auto exact = weingarten_moment1(kDim);

    // Per entry (l0, r0, l0', r0'): real and imaginary samples of
    // (VU)_{l0 r0} conj((VU)_{l0' r0'}).
    std::vector<std::vector<double>> re(16), im(16);
    RngStream rng{81};
    for (int k = 0; k < kSamples; ++k) {
        const ComplexMatrix w = v * haar_unitary(kDim, rng);
        for (std::size_t e = 0; e < 16; ++e) {
            const auto l0 = static_cast<Eigen::Index>(e >> 3),
                       r0 = static_cast<Eigen::Index>((e >> 2) & 1);
            const auto l1 = static_cast<Eigen::Index>((e >> 1) & 1),
                       r1 = static_cast<Eigen::Index>(e & 1);
            const complex_t x = w(l0, r0) * std::conj(w(l1, r1));
            re[e].push_back(x.real());
            im[e].push_back(x.imag());
        }
    }
    for (std::size_t e = 0; e < 16; ++e) {
        const complex_t want = exact(e >> 3, (e >> 2) & 1, (e >> 1) & 1, e & 1);
        for (auto [samples, target] :
             {std::pair{&re[e], want.real()}, std::pair{&im[e], want.imag()}}) {
            double m = 0.0, ss = 0.0;
            for (double x : *samples) {
                m += x;
            }
            m /= kSamples;
            for (double x : *samples) {
                ss += (x - m) * (x - m);
            }
            const double se = std::sqrt(ss / (kSamples - 1) / kSamples);
            CHECK(std::abs(m - target) <= 3 * se + 1e-15);
        }
    }
}

TEST_CASE("weingarten_moment1", "[haar]") {
    const auto m = weingarten_moment1(2);
    CHECK(m(0, 0, 0, 0) == complex_t{0.5, 0.0});
    CHECK(m(0, 0, 1, 1) == complex_t{0.0, 0.0});

    for (std::size_t n : {2UL, 3UL, 5UL}) {
        const auto w = weingarten_moment1(n);
        for (std::size_t r0 = 0; r0 < n; ++r0) {
            for (std::size_t r0p = 0; r0p < n; ++r0p) {
                complex_t s{0.0, 0.0};
                for (std::size_t l0 = 0; l0 < n; ++l0) {
                    s += w(l0, r0, l0, r0p);
                }
                CHECK(std::abs(s - complex_t{r0 == r0p ? 1.0 : 0.0, 0.0}) <= 1e-15);
            }
        }
    }
}

TEST_CASE("weingarten_moment2", "[haar]") {
    CHECK(weingarten_moment2(2)(0, 0, 0, 0, 0, 0, 0, 0).real() == Approx(1.0 / 3.0));
    CHECK(weingarten_moment2(4)(0, 0, 0, 0, 0, 0, 0, 0).real() == Approx(0.1));
    CHECK(weingarten_moment2(2)(0, 0, 0, 0, 1, 0, 0, 0) == complex_t{0.0, 0.0});
    REQUIRE_THROWS_AS(weingarten_moment2(1), std::invalid_argument);

    SECTION("matches the per-entry oracle") {
        for (std::size_t n : {2UL, 3UL}) {
            const auto w = weingarten_moment2(n);
            double worst = 0.0;
            for (std::size_t row = 0; row < n * n * n * n; ++row) {
                for (std::size_t col = 0; col < n * n * n * n; ++col) {
                    const std::size_t l0 = row / (n * n * n), r0 = row / (n * n) % n,
                                      l1 = row / n % n, r1 = row % n;
                    const std::size_t a0 = col / (n * n * n), b0 = col / (n * n) % n,
                                      a1 = col / n % n, b1 = col % n;
                    worst = std::max(worst,
                                     std::abs(w(l0, r0, l1, r1, a0, b0, a1, b1) -
                                              moment2_oracle(n, l0, r0, l1, r1, a0, b0, a1, b1)));
                }
            }
            CHECK(worst <= 1e-15);
        }
    }

    SECTION("marginalizes to the first moment") {
        for (std::size_t n : {2UL, 3UL, 4UL}) {
            const auto w2 = weingarten_moment2(n);
            const auto w1 = weingarten_moment1(n);
            double worst = 0.0;
            for (std::size_t l0 = 0; l0 < n; ++l0)
                for (std::size_t r0 = 0; r0 < n; ++r0)
                    for (std::size_t a0 = 0; a0 < n; ++a0)
                        for (std::size_t b0 = 0; b0 < n; ++b0)
                            for (std::size_t r1 = 0; r1 < n; ++r1) {
                                complex_t s{0.0, 0.0};
                                for (std::size_t l1 = 0; l1 < n; ++l1) {
                                    s += w2(l0, r0, l1, r1, a0, b0, l1, r1);
                                }
                                worst = std::max(worst, std::abs(s - w1(l0, r0, a0, b0)));
                            }
            CHECK(worst <= 1e-14);
        }
    }
}

TEST_CASE("Empirical moments converge to the exact ones", "[haar][statistical]") {
    const auto e1 = empirical_moment1(2, 100000, 5);
    CHECK(std::abs(e1(0, 0, 0, 0) - 0.5) <= 0.01);
    CHECK(std::abs(e1(0, 0, 1, 1)) <= 0.01);
    CHECK(max_abs(e1.matrix() - weingarten_moment1(2).matrix()) <= 0.01);

    const auto e2 = empirical_moment2(2, 100000, 6);
    CHECK(max_abs(e2.matrix() - weingarten_moment2(2).matrix()) <= 0.02);

    const auto e2b = empirical_moment2(3, 20000, 7);
    CHECK(max_abs(e2b.matrix() - weingarten_moment2(3).matrix()) <= 0.02 * std::sqrt(5.0));
}

TEST_CASE("Empirical moments are reproducible", "[haar]") {
    CHECK(empirical_moment2(2, 1500, 9).matrix() == empirical_moment2(2, 1500, 9).matrix());
    CHECK(empirical_moment1(3, 1500, 9).matrix() != empirical_moment1(3, 1500, 10).matrix());
}

TEST_CASE("Moment tensors respect the entry budget", "[haar]") {
    REQUIRE_THROWS_AS(empirical_moment2(6, 10, 1), std::length_error);
    REQUIRE_THROWS_AS(empirical_moment1(4, 10, 1, 100), std::length_error);
    REQUIRE_NOTHROW(empirical_moment1(4, 10, 1, 256));
    REQUIRE_THROWS_AS(empirical_moment1(2, 0, 1), std::invalid_argument);
}

TEST_CASE("local_moment2_reference", "[haar]") {
    SECTION("n=1 is (I + SWAP)/6") {
        const auto r = local_moment2_reference(1);
        ComplexMatrix want = ComplexMatrix::Identity(4, 4);
        // SWAP on a1 * 2 + a2
        ComplexMatrix swap = ComplexMatrix::Zero(4, 4);
        swap(0, 0) = swap(3, 3) = swap(1, 2) = swap(2, 1) = 1.0;
        want = (want + swap) / 6.0;
        CHECK(max_abs(r - want) <= 1e-15);
    }
    SECTION("trace one and spectrum of a tensor product") {
        for (std::size_t n = 1; n <= 3; ++n) {
            const auto r = local_moment2_reference(n);
            CHECK(r.trace().real() == Approx(1.0).epsilon(1e-14));
            const Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(r);
            const auto ev = es.eigenvalues();
            const double top = std::pow(1.0 / 3.0, static_cast<double>(n));
            std::size_t nonzero = 0;
            for (Eigen::Index i = 0; i < ev.size(); ++i) {
                CHECK(ev(i) >= -1e-14);
                if (ev(i) > 1e-12) {
                    CHECK(ev(i) == Approx(top).epsilon(1e-12));
                    ++nonzero;
                }
            }
            CHECK(nonzero == static_cast<std::size_t>(std::pow(3.0, static_cast<double>(n))));
        }
    }
    REQUIRE_THROWS_AS(local_moment2_reference(kMaxLocalMomentQubits + 1), std::length_error);
}
