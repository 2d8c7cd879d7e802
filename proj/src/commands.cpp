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
#include "qntk/commands.hpp"

#include <cmath>
#include <fstream>
#include <functional>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "qntk/concentration.hpp"
#include "qntk/expressibility.hpp"
#include "qntk/haar.hpp"
#include "qntk/sweep_io.hpp"
#include "qntk/tangent_kernel.hpp"

namespace qntk {

using nlohmann::json;

namespace {

/// Runs `body` against settings["out"] when present, else against `fallback`.
int with_output(const json &settings, std::ostream &fallback, std::ostream &err,
                const std::function<int(std::ostream &)> &body) {
    if (!settings.contains("out")) {
        return body(fallback);
    }
    const auto path = settings["out"].get<std::string>();
    std::ofstream file(path, std::ios::binary);
    if (!file) {
        err << "error: cannot open output file '" << path << "'\n";
        return kExitConfigError;
    }
    const int code = body(file);
    if (!file) {
        err << "error: failed writing '" << path << "'\n";
        return kExitConfigError;
    }
    return code;
}

template <class Fn> int guarded(std::ostream &err, Fn &&fn) {
    try {
        return fn();
    } catch (const json::exception &e) {
        err << "error: bad setting: " << e.what() << '\n';
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
    }
    return kExitConfigError;
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

double norm2(const std::vector<double> &v) {
    double s = 0.0;
    for (double x : v) {
        s += x * x;
    }
    return std::sqrt(s);
}

} // namespace

json merge_settings(const std::optional<std::string> &config_path, const json &overrides) {
    json settings = json::object();
    if (config_path) {
        std::ifstream in(*config_path);
        if (!in) {
            throw std::invalid_argument("cannot read config file '" + *config_path + "'");
        }
        try {
            in >> settings;
        } catch (const json::exception &e) {
            throw std::invalid_argument("config file '" + *config_path +
                                        "' is not valid JSON: " + e.what());
        }
        if (!settings.is_object()) {
            throw std::invalid_argument("config file must hold a JSON object");
        }
    }
    for (const auto &[key, value] : overrides.items()) {
        settings[key] = value;
    }
    return settings;
}

int cmd_sweep(const json &settings, std::ostream &log, std::ostream &err) {
    SweepConfig config;
    try {
        config = sweep_config_from_json(settings);
    } catch (const std::exception &e) {
        err << "error: " << e.what() << '\n';
        return kExitConfigError;
    }
    const std::string out_path = settings.value("out", std::string("results.csv"));
    const std::string manifest_path = out_path + ".manifest.json";
    std::ofstream csv(out_path, std::ios::binary);
    if (!csv) {
        err << "error: cannot open output file '" << out_path << "'\n";
        return kExitConfigError;
    }

    RunManifest manifest;
    manifest.config_hash = config_hash(config);
    manifest.master_seed = config.master_seed;
    manifest.start_time = utc_timestamp();
    const auto outcomes = run_sweep(config);
    manifest.end_time = utc_timestamp();

    std::vector<ExperimentRecord> records;
    bool any_failed = false;
    for (const auto &o : outcomes) {
        const std::string status = o.record ? "ok" : "failed: " + o.error;
        log << "cell n=" << o.key.n << " d=" << o.key.d << ' ' << to_string(o.key.encoding) << ' '
            << o.key.observable.name() << ": " << status << '\n';
        manifest.cells.push_back({o.key, status});
        if (o.record) {
            records.push_back(*o.record);
        } else {
            any_failed = true;
        }
    }
    write_csv(csv, records);
    csv.close();
    if (!csv) {
        err << "error: failed writing '" << out_path << "'\n";
        return kExitConfigError;
    }
    std::ofstream man(manifest_path, std::ios::binary);
    man << to_json(manifest).dump(2) << '\n';
    if (!man) {
        err << "error: cannot write manifest '" << manifest_path << "'\n";
        return kExitConfigError;
    }
    return any_failed ? kExitPartialFailure : kExitOk;
}

MomentVerification verify_moments(std::size_t dim, std::size_t samples, std::uint64_t seed) {
    if (dim < 2 || dim > 4) {
        throw std::invalid_argument("verify-moments supports dim in {2, 3, 4}, got " +
                                    std::to_string(dim));
    }
    if (samples == 0) {
        throw std::invalid_argument("samples must be positive");
    }
    MomentVerification v;
    v.dim = dim;
    v.samples = samples;
    const double scale = std::sqrt(1e5 / static_cast<double>(samples));
    v.tol_t1 = 0.01 * scale;
    v.tol_t2 = 0.02 * scale;
    v.max_dev_t1 = max_abs_diff(empirical_moment1(dim, samples, seed).matrix(),
                                weingarten_moment1(dim).matrix());
    v.max_dev_t2 = max_abs_diff(empirical_moment2(dim, samples, derive_seed(seed, 2)).matrix(),
                                weingarten_moment2(dim).matrix());
    return v;
}

int cmd_verify_moments(const json &settings, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const auto dim = settings.at("dim").get<std::size_t>();
        const auto samples = settings.value("samples", std::size_t{100000});
        const auto seed = settings.value("seed", std::uint64_t{0});
        const MomentVerification v = verify_moments(dim, samples, seed);
        return with_output(settings, out, err, [&](std::ostream &os) {
            os << "Haar moment check: dim=" << v.dim << " samples=" << v.samples << " seed=" << seed
               << '\n';
            os << "t  max_deviation          tolerance              status\n";
            auto row = [&](int t, double dev, double tol) {
                os << t << "  " << std::left << std::setw(22) << format_double(dev) << ' '
                   << std::setw(22) << format_double(tol) << ' ' << (dev <= tol ? "pass" : "FAIL")
                   << '\n';
            };
            row(1, v.max_dev_t1, v.tol_t1);
            row(2, v.max_dev_t2, v.tol_t2);
            return v.passed() ? kExitOk : kExitToleranceFailure;
        });
    });
}

int cmd_expressibility(const json &settings, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        const auto n = settings.at("n").get<std::size_t>();
        const int t = settings.value("t", 1);
        const auto ensemble = settings.value("ensemble", std::string("haar"));
        const auto samples = settings.value("samples", std::size_t{2000});
        const auto seed = settings.value("seed", std::uint64_t{0});
        const Reference ref = reference_from_name(settings.value(
            "reference", std::string(ensemble == "local_haar" ? "local_haar" : "global_haar")));
        const ExpressibilityReport r =
            measure(ensemble_sampler(ensemble, n), ref, t, n, samples, seed);
        const json j = {{"n", r.n},
                        {"t", r.t},
                        {"ensemble", ensemble},
                        {"reference", to_string(r.reference)},
                        {"measure", r.measure},
                        {"num_samples", r.num_samples},
                        {"matrix_dim", r.matrix_dim},
                        {"seed", seed}};
        return with_output(settings, out, err, [&](std::ostream &os) {
            os << j.dump(2) << '\n';
            return kExitOk;
        });
    });
}

LazyComparison compare_lazy(const LazySettings &s) {
    if (s.points == 0) {
        throw std::invalid_argument("lazy comparison needs at least one data point");
    }
    if (s.n == 0 || s.n > kMaxCellQubits) {
        throw std::length_error("lazy comparison needs 1 <= n <= " +
                                std::to_string(kMaxCellQubits));
    }
    if (s.eta < 0.0) {
        throw std::invalid_argument("eta must be non-negative");
    }
    const Observable obs = Observable::from_name(s.observable);
    if (obs.kind() == Observable::Kind::LocalPauli && obs.site() >= s.n) {
        throw std::invalid_argument("observable " + obs.name() +
                                    " does not fit in n=" + std::to_string(s.n));
    }
    const Encoding enc = encoding_from_name(s.encoding);
    const ParamCircuit circuit = ParamCircuit::build(s.n, s.d);
    RngStream param_rng(s.seed, 0);
    const ParamVector params = init_params(circuit, param_rng);
    std::vector<LabeledState> data;
    for (std::size_t i = 0; i < s.points; ++i) {
        RngStream rng(s.seed, 1, i);
        data.push_back({sample_encoded_state(enc, s.n, rng), s.label});
    }

    const KernelMatrix kernel = gram_matrix(data, circuit, params, obs);
    const auto eps0 = residuals(data, circuit, params, obs);
    const LazyTrajectory lazy = lazy_dynamics(kernel, eps0, s.eta, s.steps);
    const TrainingHistory gd = gd_train(data, circuit, params, obs, s.eta, s.steps);

    LazyComparison cmp;
    cmp.contractive = lazy.contractive;
    for (std::size_t t = 0; t <= s.steps; ++t) {
        const auto &g = gd.residuals[t];
        const auto &l = lazy.residuals[t];
        std::vector<double> diff(g.size());
        for (std::size_t i = 0; i < g.size(); ++i) {
            diff[i] = g[i] - l[i];
        }
        const double dn = norm2(diff);
        const double ln = norm2(l);
        LazyRow row{t, norm2(g), ln, 0.0};
        row.relative_gap = dn == 0.0 ? 0.0 : dn / ln;
        cmp.rows.push_back(row);
    }
    return cmp;
}

int cmd_lazy(const json &settings, std::ostream &out, std::ostream &err) {
    return guarded(err, [&] {
        LazySettings s;
        s.n = settings.value("n", s.n);
        s.d = settings.value("d", s.d);
        s.points = settings.value("points", s.points);
        s.eta = settings.value("eta", s.eta);
        s.steps = settings.value("steps", s.steps);
        s.seed = settings.value("seed", s.seed);
        s.observable = settings.value("observable", s.observable);
        s.encoding = settings.value("encoding", s.encoding);
        s.label = settings.value("label", s.label);
        const LazyComparison cmp = compare_lazy(s);
        if (!cmp.contractive) {
            err << "warning: eta * lambda_max(K) >= 2; the frozen-kernel iteration is not "
                   "contractive\n";
        }
        return with_output(settings, out, err, [&](std::ostream &os) {
            os << "step,residual_norm_gd,residual_norm_lazy,relative_gap\n";
            for (const auto &r : cmp.rows) {
                os << r.step << ',' << format_double(r.residual_norm_gd) << ','
                   << format_double(r.residual_norm_lazy) << ',' << format_double(r.relative_gap)
                   << '\n';
            }
            return kExitOk;
        });
    });
}

} // namespace qntk
