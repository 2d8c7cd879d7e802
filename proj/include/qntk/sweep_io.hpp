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
 * @file sweep_io.hpp
 * Sweep configuration files, the results CSV and the run manifest.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "qntk/concentration.hpp"

namespace qntk {

inline constexpr const char *kToolVersion = "0.1.0";

inline constexpr const char *kCsvHeader =
    "n,d,lambda,encoding,observable,num_pairs,mean_k,se_mean,var_k,se_var,bound_var,seed";

/// Shortest round-trip form is not used; always 17 significant digits.
[[nodiscard]] std::string format_double(double v);

void write_csv(std::ostream &out, std::span<const ExperimentRecord> records);
/// Parses a results CSV; throws std::runtime_error on a header or field mismatch.
[[nodiscard]] std::vector<ExperimentRecord> read_csv(std::istream &in);

/**
 * Builds a SweepConfig from a JSON object. Recognized keys: n_values,
 * d_values, d_scale, encoding (string or list), observable (string or list),
 * num_pairs, seed, max_cell_work and an `options` section with diagonal,
 * redraw_params, entangler ("chain" | "ring") and bootstrap_resamples.
 * `out` is accepted and ignored. Unknown keys are rejected.
 */
[[nodiscard]] SweepConfig sweep_config_from_json(const nlohmann::json &j);

/// Canonical form (sorted keys, every field explicit, no output path).
[[nodiscard]] nlohmann::json canonical_json(const SweepConfig &config);

/// SHA-256 hex digest of the canonical JSON dump.
[[nodiscard]] std::string config_hash(const SweepConfig &config);

[[nodiscard]] std::string sha256_hex(const std::string &data);

struct CellStatus {
    CellKey key;
    std::string status; ///< "ok" or "failed: <reason>"
};

struct RunManifest {
    std::string config_hash;
    std::uint64_t master_seed = 0;
    std::string tool_version = kToolVersion;
    std::string start_time;
    std::string end_time;
    std::vector<CellStatus> cells;
};

[[nodiscard]] nlohmann::json to_json(const RunManifest &manifest);

/// Current UTC time as ISO-8601.
[[nodiscard]] std::string utc_timestamp();

} // namespace qntk
