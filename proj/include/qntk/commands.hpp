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
 * @file commands.hpp
 * Subcommand implementations behind the `qntk` executable.
 *
 * Each command takes its settings as a JSON object (config file contents
 * with command-line overrides already merged in) so that the command logic
 * can be driven directly from tests.
 */
#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace qntk {

/// Exit codes shared by all subcommands.
enum ExitCode : int {
    kExitOk = 0,
    kExitConfigError = 1,
    kExitPartialFailure = 2,
    kExitToleranceFailure = 3,
};

/// Reads `config_path` (if any) and applies `overrides` on top (flags win).
[[nodiscard]] nlohmann::json merge_settings(const std::optional<std::string> &config_path,
                                            const nlohmann::json &overrides);

/// Writes the results CSV to settings["out"] (default results.csv) and the
/// manifest to "<out>.manifest.json".
int cmd_sweep(const nlohmann::json &settings, std::ostream &log, std::ostream &err);

struct MomentVerification {
    std::size_t dim = 0;
    std::size_t samples = 0;
    double max_dev_t1 = 0.0;
    double max_dev_t2 = 0.0;
    double tol_t1 = 0.0;
    double tol_t2 = 0.0;
    [[nodiscard]] bool passed() const { return max_dev_t1 <= tol_t1 && max_dev_t2 <= tol_t2; }
};

/// Tolerances 0.01 (t=1) and 0.02 (t=2) at 1e5 samples, scaled by sqrt(1e5 / samples).
[[nodiscard]] MomentVerification verify_moments(std::size_t dim, std::size_t samples,
                                                std::uint64_t seed);

/// settings: dim, samples (default 100000), seed, out (optional report file).
int cmd_verify_moments(const nlohmann::json &settings, std::ostream &out, std::ostream &err);

/// settings: n, t, ensemble, samples, seed, reference (optional), out (optional).
int cmd_expressibility(const nlohmann::json &settings, std::ostream &out, std::ostream &err);

struct LazyRow {
    std::size_t step = 0;
    double residual_norm_gd = 0.0;
    double residual_norm_lazy = 0.0;
    double relative_gap = 0.0;
};

struct LazySettings {
    std::size_t n = 4;
    std::size_t d = 50;
    std::size_t points = 1;
    double eta = 0.01;
    std::size_t steps = 50;
    std::uint64_t seed = 0;
    std::string observable = "zero_projector";
    std::string encoding = "global_haar";
    double label = 0.0;
};

struct LazyComparison {
    std::vector<LazyRow> rows;
    bool contractive = true;
};

/// Gradient descent versus (I - eta K)^t eps0 with K frozen at the initial
/// parameters; relative_gap = |eps_gd - eps_lazy| / |eps_lazy|.
[[nodiscard]] LazyComparison compare_lazy(const LazySettings &settings);

/// settings: n, d, points, eta, steps, seed, observable, encoding, label, out.
int cmd_lazy(const nlohmann::json &settings, std::ostream &out, std::ostream &err);

} // namespace qntk
