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

#include <omp.h>

#include "catch_amalgamated.hpp"

#include "qntk/concentration.hpp"

using namespace qntk;
using Catch::Approx;

namespace {
const Observable kProj = Observable::zero_projector();
const Observable kY0 = Observable::pauli(PauliAxis::Y, 0);
} // namespace

TEST_CASE("variance_bound", "[concentration]") {
    CHECK(variance_bound(4, 32, 1.0, Encoding::GlobalHaar) ==
          Approx(4096.0 / 65025.0).epsilon(1e-14));
    CHECK(variance_bound(4, 32, 1.0, Encoding::LocalHaarProduct) == Approx(16.0).epsilon(1e-14));
    CHECK(variance_bound(4, 32, 16.0, Encoding::GlobalHaar) ==
          Approx(256.0 * 4096.0 / 65025.0).epsilon(1e-14));
    CHECK(variance_bound(4, 32, 16.0, Encoding::GlobalHaar) == Approx(16.13).epsilon(1e-3));
    REQUIRE_THROWS_AS(variance_bound(0, 32, 1.0, Encoding::GlobalHaar), std::invalid_argument);
}

TEST_CASE("chebyshev_tail", "[concentration]") {
    CHECK(chebyshev_tail(0.04, 0.2) == Approx(1.0));
    CHECK(chebyshev_tail(0.0001, 0.1) == Approx(0.01));
    CHECK(chebyshev_tail(5.0, 0.1) == 1.0);
    REQUIRE_THROWS_AS(chebyshev_tail(0.1, 0.0), std::invalid_argument);
    REQUIRE_THROWS_AS(chebyshev_tail(0.1, -1.0), std::invalid_argument);

    const auto r = bound_report(4, 32, 1.0, Encoding::GlobalHaar, 0.5);
    REQUIRE(r.tail_bound.has_value());
    CHECK(*r.tail_bound == Approx(r.bound_var / 0.25));
    CHECK_FALSE(bound_report(4, 32, 1.0, Encoding::GlobalHaar).tail_bound.has_value());
}

TEST_CASE("fit_log2_line", "[concentration]") {
    const std::vector<double> x{4, 5, 6};
    const std::vector<double> y{std::exp2(-8.0), std::exp2(-10.0), std::exp2(-12.0)};
    const auto fit = fit_log2_line(x, y);
    CHECK(fit.slope == Approx(-2.0).epsilon(1e-14));
    CHECK(fit.intercept == Approx(0.0).margin(1e-12));
    CHECK(fit.r_squared == Approx(1.0));
    CHECK(fit.used == 3);

    const std::vector<double> flat{0.25, 0.25, 0.25};
    CHECK(fit_log2_line(x, flat).slope == Approx(0.0).margin(1e-15));

    const std::vector<double> x4{4, 5, 6, 7};
    const std::vector<double> with_zero{0.5, 0.0, 0.125, 0.0625};
    const auto f = fit_log2_line(x4, with_zero);
    CHECK(f.excluded == 1);
    CHECK(f.used == 3);

    const std::vector<double> x2{4, 4, 5};
    REQUIRE_THROWS_AS(fit_log2_line(x2, flat), std::invalid_argument);
}

TEST_CASE("fit_slope over records", "[concentration]") {
    std::vector<ExperimentRecord> recs;
    for (std::size_t n : {4UL, 5UL, 6UL, 7UL}) {
        ExperimentRecord r;
        r.n = n;
        r.var_k = std::exp2(-3.0 * static_cast<double>(n));
        r.mean_k = -std::exp2(-1.0 * static_cast<double>(n));
        recs.push_back(r);
    }
    CHECK(fit_slope(recs, Field::VarK).slope == Approx(-3.0));
    // Means enter through their magnitude.
    CHECK(fit_slope(recs, Field::MeanK).slope == Approx(-1.0));
}

TEST_CASE("sample_cell is deterministic", "[concentration]") {
    const auto a = sample_cell(3, 2, Encoding::GlobalHaar, kProj, 2, 42);
    const auto b = sample_cell(3, 2, Encoding::GlobalHaar, kProj, 2, 42);
    CHECK(a.mean_k == b.mean_k);
    CHECK(a.var_k == b.var_k);
    CHECK(a.se_var == b.se_var);
    CHECK(a.lambda == 12);
    CHECK(a.seed == 42);
    REQUIRE_THROWS_AS(sample_cell(3, 2, Encoding::GlobalHaar, kProj, 1, 42), std::invalid_argument);
    REQUIRE_THROWS_AS(sample_cell(kMaxCellQubits + 1, 1, Encoding::GlobalHaar, kProj, 2, 1),
                      std::length_error);
}

TEST_CASE("Serial and parallel cells are bit-identical", "[concentration]") {
    omp_set_num_threads(4);
    CellOptions serial;
    serial.execution = Execution::Serial;
    CellOptions parallel;
    parallel.execution = Execution::Parallel;
    for (auto enc : {Encoding::GlobalHaar, Encoding::LocalHaarProduct}) {
        const auto s = sample_kernel_values(5, 3, enc, kY0, 40, 9, serial);
        const auto p = sample_kernel_values(5, 3, enc, kY0, 40, 9, parallel);
        CHECK(s == p);
    }
}

TEST_CASE("Diagonal kernel values are squared norms", "[concentration]") {
    CellOptions opts;
    opts.diagonal = true;
    for (auto enc : {Encoding::GlobalHaar, Encoding::LocalHaarProduct}) {
        for (double v : sample_kernel_values(3, 3, enc, kY0, 50, 13, opts)) {
            CHECK(v >= 0.0);
        }
    }
    opts.redraw_params = true;
    opts.entangler = Entangler::Ring;
    const auto r = sample_cell(3, 2, Encoding::GlobalHaar, kProj, 20, 13, opts);
    CHECK(r.mean_k >= 0.0);
}

TEST_CASE("Variance stays under the bound at n=4, d=4", "[concentration][statistical]") {
    const auto r = sample_cell(4, 4, Encoding::GlobalHaar, kProj, 200, 2026);
    CHECK(r.bound_var == Approx(4096.0 / 65025.0));
    CHECK(r.var_k <= r.bound_var + 3 * r.se_var);
    CHECK(std::abs(r.mean_k) <= 3 * r.se_mean);
    CHECK(r.se_var > 0.0);
}

TEST_CASE("Deeper circuits do not shrink the variance", "[concentration][statistical]") {
    for (std::size_t n : {5UL, 6UL, 7UL}) {
        const auto shallow =
            sample_cell(n, 5, Encoding::GlobalHaar, kProj, 200, derive_seed(70, n));
        const auto deep = sample_cell(n, 50, Encoding::GlobalHaar, kProj, 200, derive_seed(71, n));
        CHECK(deep.var_k >= shallow.var_k - 3 * std::hypot(shallow.se_var, deep.se_var));
    }
}

TEST_CASE("The global projector concentrates faster than a local Pauli",
          "[concentration][statistical]") {
    SweepConfig cfg;
    cfg.n_values = {4, 5, 6, 7, 8};
    cfg.observables = {kProj, kY0};
    cfg.master_seed = 72;
    std::vector<ExperimentRecord> proj, pauli;
    for (const auto &o : run_sweep(cfg)) {
        REQUIRE(o.record.has_value());
        (o.key.observable == kProj ? proj : pauli).push_back(*o.record);
    }
    const double sp = fit_slope(proj, Field::VarK).slope;
    const double sy = fit_slope(pauli, Field::VarK).slope;
    CHECK(sy - sp >= 1.0);
}

TEST_CASE("summarize", "[concentration]") {
    const std::vector<double> v{1.0, 2.0, 3.0, 4.0};
    const auto s = summarize(v, 0, 1);
    CHECK(s.mean == 2.5);
    CHECK(s.variance == Approx(5.0 / 3.0));
    CHECK(s.se_mean == Approx(std::sqrt(5.0 / 12.0)));
    CHECK(s.se_variance == 0.0);
    CHECK(summarize(v, 200, 1).se_variance > 0.0);
    CHECK(summarize(v, 200, 1).se_variance == summarize(v, 200, 1).se_variance);
}

TEST_CASE("Sweep bookkeeping", "[concentration]") {
    SweepConfig cfg;
    cfg.n_values = {4, 5};
    cfg.num_pairs = 4;
    cfg.master_seed = 3;
    cfg.options.bootstrap_resamples = 10;

    const auto cells = sweep_cells(cfg);
    REQUIRE(cells.size() == 2);
    CHECK(cells[0].d == 4);
    CHECK(cells[1].d == 5);

    const auto out = run_sweep(cfg);
    REQUIRE(out.size() == 2);
    REQUIRE(out[0].record.has_value());
    CHECK(out[0].record->lambda == 32);
    CHECK(out[1].record->lambda == 50);
    CHECK(out[0].record->seed == cell_seed(3, cells[0]));
    CHECK(cell_seed(3, cells[0]) != cell_seed(3, cells[1]));

    SECTION("explicit depths and scaled depths") {
        SweepConfig c2 = cfg;
        c2.d_values = {5, 20};
        c2.observables = {kProj, kY0};
        c2.encodings = {Encoding::GlobalHaar, Encoding::LocalHaarProduct};
        CHECK(sweep_cells(c2).size() == 16);
        SweepConfig c3 = cfg;
        c3.d_scale = 0.1;
        CHECK(sweep_cells(c3)[0].d == 1);
    }
    SECTION("a failing cell does not stop the sweep") {
        SweepConfig c4 = cfg;
        c4.max_cell_work = 4 * 2 * 4 * 4 * 16; // admits n=4 only
        const auto res = run_sweep(c4);
        CHECK(res[0].record.has_value());
        CHECK_FALSE(res[1].record.has_value());
        CHECK_THAT(res[1].error, Catch::Matchers::ContainsSubstring("max_cell_work"));
    }
    SECTION("validation") {
        SweepConfig bad = cfg;
        bad.n_values = {20};
        REQUIRE_THROWS_WITH(validate(bad), Catch::Matchers::ContainsSubstring("1 <= n <= 12"));
        bad = cfg;
        bad.num_pairs = 1;
        REQUIRE_THROWS_AS(validate(bad), std::invalid_argument);
        bad = cfg;
        bad.n_values.clear();
        REQUIRE_THROWS_AS(validate(bad), std::invalid_argument);
    }
}

TEST_CASE("Encoding names", "[concentration]") {
    CHECK(to_string(Encoding::GlobalHaar) == "global_haar");
    CHECK(to_string(Encoding::LocalHaarProduct) == "local_haar");
    CHECK(encoding_from_name("local_haar") == Encoding::LocalHaarProduct);
    REQUIRE_THROWS_AS(encoding_from_name("x"), std::invalid_argument);
}
