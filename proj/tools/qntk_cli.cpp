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
 * @file qntk_cli.cpp
 * Command-line entry point: `qntk sweep | verify-moments | expressibility | lazy`.
 *
 * Worker count comes from QNTK_NUM_THREADS (default: all logical cores).
 */
#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <omp.h>

#include "CLI11.hpp"
#include "json.hpp"

#include "qntk/commands.hpp"

namespace {

using nlohmann::json;

struct Common {
    std::optional<std::string> config;
    json overrides = json::object();
};

/// Registers an option whose value lands in `overrides[key]` only when given.
template <class T>
CLI::Option *add_override(CLI::App *app, Common &common, const std::string &flag,
                          const std::string &key, const std::string &help) {
    auto *opt = app->add_option_function<T>(
        flag, [&common, key](const T &v) { common.overrides[key] = v; }, help);
    return opt;
}

void add_common(CLI::App *app, Common &common) {
    app->add_option_function<std::string>(
        "--config", [&common](const std::string &p) { common.config = p; },
        "JSON settings file; command-line flags take precedence");
    add_override<std::uint64_t>(app, common, "--seed", "seed", "master random seed");
    add_override<std::string>(app, common, "--out", "out", "output file");
}

void configure_threads() {
    if (const char *env = std::getenv("QNTK_NUM_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n > 0) {
                omp_set_num_threads(n);
                return;
            }
        } catch (const std::exception &) {
        }
        std::cerr << "warning: ignoring invalid QNTK_NUM_THREADS='" << env << "'\n";
    }
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Quantum neural tangent kernel concentration toolkit"};
    app.require_subcommand(1);

    Common sweep_opts;
    auto *sweep = app.add_subcommand("sweep", "Monte-Carlo kernel statistics over an (n, d) grid");
    add_common(sweep, sweep_opts);
    add_override<std::vector<std::size_t>>(sweep, sweep_opts, "--n", "n_values", "qubit counts");
    add_override<std::vector<std::size_t>>(sweep, sweep_opts, "--d", "d_values", "block counts");
    add_override<double>(sweep, sweep_opts, "--d-scale", "d_scale",
                         "d = round(scale * n) when --d is absent");
    add_override<std::size_t>(sweep, sweep_opts, "--pairs", "num_pairs", "input pairs per cell");
    add_override<std::vector<std::string>>(sweep, sweep_opts, "--encoding", "encoding",
                                           "global_haar and/or local_haar");
    add_override<std::vector<std::string>>(sweep, sweep_opts, "--observable", "observable",
                                           "zero_projector and/or pauli_y0, ...");
    add_override<std::uint64_t>(sweep, sweep_opts, "--max-cell-work", "max_cell_work",
                                "per-cell work guard (0 = off)");

    Common moments_opts;
    auto *moments = app.add_subcommand("verify-moments",
                                       "Compare sampled Haar moments with Weingarten formulas");
    add_common(moments, moments_opts);
    add_override<std::size_t>(moments, moments_opts, "--dim", "dim", "unitary dimension (2-4)");
    add_override<std::size_t>(moments, moments_opts, "--samples", "samples", "Haar samples");

    Common expr_opts;
    auto *expr = app.add_subcommand("expressibility", "Trace-norm expressibility of an ensemble");
    add_common(expr, expr_opts);
    add_override<std::size_t>(expr, expr_opts, "--n", "n", "qubit count");
    add_override<int>(expr, expr_opts, "--t", "t", "moment order (1 or 2)");
    add_override<std::string>(expr, expr_opts, "--ensemble", "ensemble",
                              "singleton, haar or local_haar");
    add_override<std::size_t>(expr, expr_opts, "--samples", "samples", "ensemble samples");
    add_override<std::string>(expr, expr_opts, "--reference", "reference",
                              "global_haar or local_haar");

    Common lazy_opts;
    auto *lazy = app.add_subcommand("lazy", "Gradient descent versus frozen-kernel dynamics");
    add_common(lazy, lazy_opts);
    add_override<std::size_t>(lazy, lazy_opts, "--n", "n", "qubit count");
    add_override<std::size_t>(lazy, lazy_opts, "--d", "d", "block count");
    add_override<std::size_t>(lazy, lazy_opts, "--points", "points", "data points");
    add_override<double>(lazy, lazy_opts, "--eta", "eta", "learning rate");
    add_override<std::size_t>(lazy, lazy_opts, "--steps", "steps", "training steps");
    add_override<std::string>(lazy, lazy_opts, "--observable", "observable", "loss observable");
    add_override<std::string>(lazy, lazy_opts, "--encoding", "encoding", "input ensemble");
    add_override<double>(lazy, lazy_opts, "--label", "label", "label of every data point");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : qntk::kExitConfigError;
    }
    configure_threads();

    auto settings_for = [](const Common &c) { return qntk::merge_settings(c.config, c.overrides); };
    try {
        if (sweep->parsed()) {
            return qntk::cmd_sweep(settings_for(sweep_opts), std::cerr, std::cerr);
        }
        if (moments->parsed()) {
            return qntk::cmd_verify_moments(settings_for(moments_opts), std::cout, std::cerr);
        }
        if (expr->parsed()) {
            return qntk::cmd_expressibility(settings_for(expr_opts), std::cout, std::cerr);
        }
        if (lazy->parsed()) {
            return qntk::cmd_lazy(settings_for(lazy_opts), std::cout, std::cerr);
        }
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return qntk::kExitConfigError;
    }
    return qntk::kExitConfigError;
}
