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
#include "qntk/concentration.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "qntk/tangent_kernel.hpp"

namespace qntk {

std::string to_string(Encoding enc) {
    return enc == Encoding::GlobalHaar ? "global_haar" : "local_haar";
}

Encoding encoding_from_name(std::string_view name) {
    if (name == "global_haar" || name == "global") {
        return Encoding::GlobalHaar;
    }
    if (name == "local_haar" || name == "local") {
        return Encoding::LocalHaarProduct;
    }
    throw std::invalid_argument("unknown encoding '" + std::string(name) +
                                "' (expected global_haar or local_haar)");
}

Statevector sample_encoded_state(Encoding enc, std::size_t num_qubits, RngStream &rng) {
    return enc == Encoding::GlobalHaar ? sample_haar_state(num_qubits, rng)
                                       : sample_local_haar_state(num_qubits, rng);
}

namespace {

void check_cell(std::size_t n, std::size_t d, const Observable &obs) {
    if (n == 0 || n > kMaxCellQubits) {
        throw std::length_error("cell qubit count must satisfy 1 <= n <= " +
                                std::to_string(kMaxCellQubits) + ", got n=" + std::to_string(n));
    }
    if (d == 0) {
        throw std::invalid_argument("block count d must be positive");
    }
    if (obs.kind() == Observable::Kind::LocalPauli && obs.site() >= n) {
        throw std::invalid_argument("observable " + obs.name() + " does not fit in " +
                                    std::to_string(n) + " qubits");
    }
}

double dot(const std::vector<double> &a, const std::vector<double> &b) {
    double acc = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        acc += a[i] * b[i];
    }
    return acc;
}

double pair_kernel(std::size_t n, Encoding encoding, const Observable &obs,
                   const ParamCircuit &circuit, const ParamVector &shared_params,
                   const CellOptions &options, std::uint64_t seed, std::size_t pair) {
    RngStream rng(seed, 1, pair);
    ParamVector own;
    if (options.redraw_params) {
        own = init_params(circuit, rng);
    }
    const ParamVector &params = options.redraw_params ? own : shared_params;
    const LabeledState x{sample_encoded_state(encoding, n, rng), 0.0};
    const auto gx = gradient(x, circuit, params, obs);
    if (options.diagonal) {
        return dot(gx, gx);
    }
    const LabeledState xp{sample_encoded_state(encoding, n, rng), 0.0};
    return dot(gx, gradient(xp, circuit, params, obs));
}

double bessel_variance(std::span<const double> v, double mean) {
    double ss = 0.0;
    for (double x : v) {
        ss += (x - mean) * (x - mean);
    }
    return ss / static_cast<double>(v.size() - 1);
}

double mean_of(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) {
        s += x;
    }
    return s / static_cast<double>(v.size());
}

} // namespace

std::vector<double> sample_kernel_values(std::size_t n, std::size_t d, Encoding encoding,
                                         const Observable &obs, std::size_t num_pairs,
                                         std::uint64_t seed, const CellOptions &options) {
    check_cell(n, d, obs);
    const ParamCircuit circuit = ParamCircuit::build(n, d, options.entangler);
    RngStream param_rng(seed, 0);
    const ParamVector params = init_params(circuit, param_rng);

    std::vector<double> values(num_pairs);
    if (options.execution == Execution::Serial) {
        for (std::size_t p = 0; p < num_pairs; ++p) {
            values[p] = pair_kernel(n, encoding, obs, circuit, params, options, seed, p);
        }
        return values;
    }
    const auto count = static_cast<std::int64_t>(num_pairs);
#pragma omp parallel for schedule(dynamic) if (!omp_in_parallel())
    for (std::int64_t p = 0; p < count; ++p) {
        const auto idx = static_cast<std::size_t>(p);
        values[idx] = pair_kernel(n, encoding, obs, circuit, params, options, seed, idx);
    }
    return values;
}

SampleStats summarize(std::span<const double> values, std::size_t resamples, std::uint64_t seed) {
    const std::size_t m = values.size();
    if (m < 2) {
        throw std::invalid_argument("need at least two samples for a variance");
    }
    SampleStats stats;
    stats.mean = mean_of(values);
    stats.variance = bessel_variance(values, stats.mean);
    stats.se_mean = std::sqrt(stats.variance / static_cast<double>(m));
    if (resamples >= 2) {
        std::vector<double> boot(resamples);
        std::vector<double> draw(m);
        for (std::size_t b = 0; b < resamples; ++b) {
            RngStream rng(seed, 2, b);
            for (auto &v : draw) {
                v = values[rng.below(m)];
            }
            boot[b] = bessel_variance(draw, mean_of(draw));
        }
        stats.se_variance = std::sqrt(bessel_variance(boot, mean_of(boot)));
    }
    return stats;
}

ExperimentRecord sample_cell(std::size_t n, std::size_t d, Encoding encoding, const Observable &obs,
                             std::size_t num_pairs, std::uint64_t seed,
                             const CellOptions &options) {
    if (num_pairs < 2) {
        throw std::invalid_argument("a cell needs at least two pairs");
    }
    const auto values = sample_kernel_values(n, d, encoding, obs, num_pairs, seed, options);
    const SampleStats stats = summarize(values, options.bootstrap_resamples, seed);

    ExperimentRecord rec;
    rec.n = n;
    rec.d = d;
    rec.lambda = 2 * n * d;
    rec.encoding = encoding;
    rec.observable = obs;
    rec.num_pairs = num_pairs;
    rec.mean_k = stats.mean;
    rec.se_mean = stats.se_mean;
    rec.var_k = stats.variance;
    rec.se_var = stats.se_variance;
    rec.bound_var = variance_bound(n, rec.lambda, obs.trace_of_square(n), encoding);
    rec.seed = seed;
    return rec;
}

double variance_bound(std::size_t n, std::size_t lambda, double tr_o_squared, Encoding encoding) {
    if (n == 0 || lambda == 0 || !(tr_o_squared > 0.0)) {
        throw std::invalid_argument("variance bound needs positive n, lambda and tr[O^2]");
    }
    const double lam = static_cast<double>(lambda);
    const double numer = lam * lam * tr_o_squared * tr_o_squared;
    const int two_n = 2 * static_cast<int>(n);
    if (encoding == Encoding::GlobalHaar) {
        const double denom = std::ldexp(1.0, two_n) - 1.0;
        return 4.0 * numer / (denom * denom);
    }
    return numer / std::ldexp(1.0, two_n - 2);
}

double chebyshev_tail(double bound_var, double epsilon) {
    if (!(epsilon > 0.0)) {
        throw std::invalid_argument("Chebyshev threshold must be positive");
    }
    return std::min(1.0, bound_var / (epsilon * epsilon));
}

BoundReport bound_report(std::size_t n, std::size_t lambda, double tr_o_squared, Encoding encoding,
                         std::optional<double> epsilon) {
    BoundReport r;
    r.n = n;
    r.lambda = lambda;
    r.tr_o_squared = tr_o_squared;
    r.encoding = encoding;
    r.bound_var = variance_bound(n, lambda, tr_o_squared, encoding);
    if (epsilon) {
        r.epsilon = epsilon;
        r.tail_bound = chebyshev_tail(r.bound_var, *epsilon);
    }
    return r;
}

SlopeFit fit_log2_line(std::span<const double> x, std::span<const double> y) {
    if (x.size() != y.size()) {
        throw std::invalid_argument("slope fit needs matching x and y");
    }
    std::vector<double> xs;
    std::vector<double> ys;
    SlopeFit fit;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double v = std::abs(y[i]);
        if (!(v > 0.0) || !std::isfinite(v)) {
            ++fit.excluded;
            continue;
        }
        xs.push_back(x[i]);
        ys.push_back(std::log2(v));
    }
    const std::set<double> distinct(xs.begin(), xs.end());
    if (distinct.size() < 3) {
        throw std::invalid_argument("slope fit needs at least 3 usable points with distinct n (" +
                                    std::to_string(fit.excluded) + " excluded)");
    }
    fit.used = xs.size();
    const double mx = mean_of(xs);
    const double my = mean_of(ys);
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.r_squared = syy > 0.0 ? (sxy * sxy) / (sxx * syy) : 1.0;
    return fit;
}

SlopeFit fit_slope(std::span<const ExperimentRecord> records, Field field) {
    std::vector<double> x;
    std::vector<double> y;
    for (const auto &r : records) {
        x.push_back(static_cast<double>(r.n));
        y.push_back(field == Field::MeanK ? r.mean_k : r.var_k);
    }
    return fit_log2_line(x, y);
}

void validate(const SweepConfig &config) {
    if (config.n_values.empty()) {
        throw std::invalid_argument("n_values must not be empty");
    }
    for (std::size_t n : config.n_values) {
        if (n == 0 || n > kMaxCellQubits) {
            throw std::invalid_argument(
                "n=" + std::to_string(n) +
                " violates the guard 1 <= n <= " + std::to_string(kMaxCellQubits));
        }
    }
    for (std::size_t d : config.d_values) {
        if (d == 0) {
            throw std::invalid_argument("d_values entries must be positive");
        }
    }
    if (config.d_values.empty() && !(config.d_scale > 0.0)) {
        throw std::invalid_argument("d_scale must be positive");
    }
    if (config.encodings.empty() || config.observables.empty()) {
        throw std::invalid_argument("at least one encoding and one observable are required");
    }
    const std::size_t min_n = *std::min_element(config.n_values.begin(), config.n_values.end());
    for (const auto &obs : config.observables) {
        if (obs.kind() == Observable::Kind::LocalPauli && obs.site() >= min_n) {
            throw std::invalid_argument("observable " + obs.name() +
                                        " does not fit in n=" + std::to_string(min_n));
        }
    }
    if (config.num_pairs < 2) {
        throw std::invalid_argument("num_pairs must be at least 2");
    }
}

std::vector<CellKey> sweep_cells(const SweepConfig &config) {
    std::vector<CellKey> cells;
    for (Encoding enc : config.encodings) {
        for (const auto &obs : config.observables) {
            for (std::size_t n : config.n_values) {
                if (config.d_values.empty()) {
                    const auto d = static_cast<std::size_t>(
                        std::max(1.0, std::round(config.d_scale * static_cast<double>(n))));
                    cells.push_back({n, d, enc, obs});
                } else {
                    for (std::size_t d : config.d_values) {
                        cells.push_back({n, d, enc, obs});
                    }
                }
            }
        }
    }
    return cells;
}

std::uint64_t cell_seed(std::uint64_t master_seed, const CellKey &key) {
    std::uint64_t h = splitmix64(key.n) ^ (splitmix64(key.d) << 1);
    h = splitmix64(h ^ static_cast<std::uint64_t>(key.encoding));
    for (char c : key.observable.name()) {
        h = splitmix64(h ^ static_cast<unsigned char>(c));
    }
    return derive_seed(master_seed, h);
}

std::vector<CellOutcome> run_sweep(const SweepConfig &config) {
    validate(config);
    std::vector<CellOutcome> outcomes;
    for (const CellKey &key : sweep_cells(config)) {
        CellOutcome out{key, std::nullopt, {}};
        try {
            const std::uint64_t work = static_cast<std::uint64_t>(config.num_pairs) * 2 * key.n *
                                       key.d * (std::uint64_t{1} << key.n);
            if (config.max_cell_work != 0 && work > config.max_cell_work) {
                throw std::length_error("cell work " + std::to_string(work) +
                                        " exceeds max_cell_work " +
                                        std::to_string(config.max_cell_work));
            }
            out.record = sample_cell(key.n, key.d, key.encoding, key.observable, config.num_pairs,
                                     cell_seed(config.master_seed, key), config.options);
        } catch (const std::exception &e) {
            out.error = e.what();
        }
        outcomes.push_back(std::move(out));
    }
    return outcomes;
}

} // namespace qntk
