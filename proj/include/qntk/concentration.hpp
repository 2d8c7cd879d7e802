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
 * @file concentration.hpp
 * Monte-Carlo statistics of kernel values over encoded input pairs, the
 * variance bounds they are checked against, and log-linear decay fits.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "qntk/ansatz.hpp"
#include "qntk/observable.hpp"

namespace qntk {

enum class Encoding { GlobalHaar, LocalHaarProduct };

[[nodiscard]] std::string to_string(Encoding enc);
[[nodiscard]] Encoding encoding_from_name(std::string_view name);

/// Draws one encoded input from the maximally expressive ensemble of `enc`.
[[nodiscard]] Statevector sample_encoded_state(Encoding enc, std::size_t num_qubits,
                                               RngStream &rng);

enum class Execution { Serial, Parallel };

/// Largest register a Monte-Carlo cell accepts.
inline constexpr std::size_t kMaxCellQubits = 12;

struct CellOptions {
    /// x' = x for every pair; diagonal kernel values are squared norms.
    bool diagonal = false;
    /// Fresh parameter vector per pair instead of one per cell.
    bool redraw_params = false;
    Entangler entangler = Entangler::Chain;
    std::size_t bootstrap_resamples = 1000;
    Execution execution = Execution::Parallel;
};

struct ExperimentRecord {
    std::size_t n = 0;
    std::size_t d = 0;
    std::size_t lambda = 0;
    Encoding encoding = Encoding::GlobalHaar;
    Observable observable = Observable::zero_projector();
    std::size_t num_pairs = 0;
    double mean_k = 0.0;
    double se_mean = 0.0;
    double var_k = 0.0;  ///< Bessel-corrected
    double se_var = 0.0; ///< bootstrap
    double bound_var = 0.0;
    std::uint64_t seed = 0;
};

/**
 * Raw kernel values K(x_p, x'_p) for p = 0..num_pairs-1. Pair p draws its
 * inputs from stream (seed, 1, p); the shared parameter vector comes from
 * stream (seed, 0). Serial and parallel execution give identical values.
 */
[[nodiscard]] std::vector<double> sample_kernel_values(std::size_t n, std::size_t d,
                                                       Encoding encoding, const Observable &obs,
                                                       std::size_t num_pairs, std::uint64_t seed,
                                                       const CellOptions &options = {});

[[nodiscard]] ExperimentRecord sample_cell(std::size_t n, std::size_t d, Encoding encoding,
                                           const Observable &obs, std::size_t num_pairs,
                                           std::uint64_t seed, const CellOptions &options = {});

/// Global: 4 L^2 (tr O^2)^2 / (2^{2n} - 1)^2.  Local: L^2 (tr O^2)^2 / 2^{2n-2}.
[[nodiscard]] double variance_bound(std::size_t n, std::size_t lambda, double tr_o_squared,
                                    Encoding encoding);

/// min(1, bound_var / epsilon^2)
[[nodiscard]] double chebyshev_tail(double bound_var, double epsilon);

struct BoundReport {
    std::size_t n = 0;
    std::size_t lambda = 0;
    double tr_o_squared = 0.0;
    Encoding encoding = Encoding::GlobalHaar;
    double bound_var = 0.0;
    std::optional<double> epsilon;
    std::optional<double> tail_bound;
};

[[nodiscard]] BoundReport bound_report(std::size_t n, std::size_t lambda, double tr_o_squared,
                                       Encoding encoding,
                                       std::optional<double> epsilon = std::nullopt);

/// Sample statistics shared by the cell aggregator and the tests.
struct SampleStats {
    double mean = 0.0;
    double se_mean = 0.0;
    double variance = 0.0;
    double se_variance = 0.0;
};

[[nodiscard]] SampleStats summarize(std::span<const double> values, std::size_t resamples,
                                    std::uint64_t seed);

enum class Field { MeanK, VarK };

struct SlopeFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 0.0;
    std::size_t used = 0;
    std::size_t excluded = 0;
};

/// OLS of log2|field| against n; nonpositive or non-finite values are excluded
/// and counted. Needs three usable records with distinct n.
[[nodiscard]] SlopeFit fit_slope(std::span<const ExperimentRecord> records, Field field);

/// OLS of log2 y against x for raw points (same exclusion rules).
[[nodiscard]] SlopeFit fit_log2_line(std::span<const double> x, std::span<const double> y);

struct SweepConfig {
    std::vector<std::size_t> n_values;
    /// Explicit block counts; when empty, d = max(1, round(d_scale * n)).
    std::vector<std::size_t> d_values;
    double d_scale = 1.0;
    std::vector<Encoding> encodings{Encoding::GlobalHaar};
    std::vector<Observable> observables{Observable::zero_projector()};
    std::size_t num_pairs = 200;
    std::uint64_t master_seed = 0;
    CellOptions options;
    /// Per-cell guard on n_pairs * Lambda * 2^n; 0 disables it.
    std::uint64_t max_cell_work = 0;
};

/// Throws std::invalid_argument describing the first violated constraint.
void validate(const SweepConfig &config);

struct CellKey {
    std::size_t n = 0;
    std::size_t d = 0;
    Encoding encoding = Encoding::GlobalHaar;
    Observable observable = Observable::zero_projector();
};

/// Cells in output order: encoding, observable, n, then d.
[[nodiscard]] std::vector<CellKey> sweep_cells(const SweepConfig &config);

/// Seed for one cell, independent of which other cells the sweep contains.
[[nodiscard]] std::uint64_t cell_seed(std::uint64_t master_seed, const CellKey &key);

struct CellOutcome {
    CellKey key;
    std::optional<ExperimentRecord> record;
    std::string error; ///< empty on success
};

/// Runs every cell; a failing cell is reported without stopping the rest.
[[nodiscard]] std::vector<CellOutcome> run_sweep(const SweepConfig &config);

} // namespace qntk
