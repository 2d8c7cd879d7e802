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
#include "qntk/sweep_io.hpp"

#include <array>
#include <chrono>
#include <cstdio>
#include <ctime>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <openssl/evp.h>

namespace qntk {

using nlohmann::json;

std::string format_double(double v) {
    std::array<char, 64> buf{};
    std::snprintf(buf.data(), buf.size(), "%.17g", v);
    return buf.data();
}

void write_csv(std::ostream &out, std::span<const ExperimentRecord> records) {
    out << kCsvHeader << '\n';
    for (const auto &r : records) {
        out << r.n << ',' << r.d << ',' << r.lambda << ',' << to_string(r.encoding) << ','
            << r.observable.name() << ',' << r.num_pairs << ',' << format_double(r.mean_k) << ','
            << format_double(r.se_mean) << ',' << format_double(r.var_k) << ','
            << format_double(r.se_var) << ',' << format_double(r.bound_var) << ',' << r.seed
            << '\n';
    }
}

std::vector<ExperimentRecord> read_csv(std::istream &in) {
    std::string line;
    if (!std::getline(in, line) || line != kCsvHeader) {
        throw std::runtime_error("results CSV header mismatch");
    }
    std::vector<ExperimentRecord> records;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) {
            f.push_back(cell);
        }
        if (f.size() != 12) {
            throw std::runtime_error("results CSV row has " + std::to_string(f.size()) +
                                     " fields, expected 12");
        }
        ExperimentRecord r;
        r.n = std::stoul(f[0]);
        r.d = std::stoul(f[1]);
        r.lambda = std::stoul(f[2]);
        r.encoding = encoding_from_name(f[3]);
        r.observable = Observable::from_name(f[4]);
        r.num_pairs = std::stoul(f[5]);
        r.mean_k = std::stod(f[6]);
        r.se_mean = std::stod(f[7]);
        r.var_k = std::stod(f[8]);
        r.se_var = std::stod(f[9]);
        r.bound_var = std::stod(f[10]);
        r.seed = std::stoull(f[11]);
        records.push_back(r);
    }
    return records;
}

namespace {

template <class T, class Parse> std::vector<T> one_or_many(const json &j, Parse parse) {
    std::vector<T> out;
    if (j.is_array()) {
        for (const auto &e : j) {
            out.push_back(parse(e.get<std::string>()));
        }
    } else {
        out.push_back(parse(j.get<std::string>()));
    }
    return out;
}

void reject_unknown(const json &j, std::initializer_list<const char *> known,
                    const std::string &where) {
    for (const auto &[key, _] : j.items()) {
        bool ok = false;
        for (const char *k : known) {
            ok = ok || key == k;
        }
        if (!ok) {
            throw std::invalid_argument("unknown key '" + key + "' in " + where);
        }
    }
}

} // namespace

SweepConfig sweep_config_from_json(const json &j) {
    if (!j.is_object()) {
        throw std::invalid_argument("sweep config must be a JSON object");
    }
    reject_unknown(j,
                   {"n_values", "d_values", "d_scale", "encoding", "observable", "num_pairs",
                    "seed", "max_cell_work", "options", "out"},
                   "sweep config");
    SweepConfig c;
    try {
        c.n_values = j.at("n_values").get<std::vector<std::size_t>>();
        if (j.contains("d_values")) {
            c.d_values = j["d_values"].get<std::vector<std::size_t>>();
        }
        c.d_scale = j.value("d_scale", 1.0);
        if (j.contains("encoding")) {
            c.encodings = one_or_many<Encoding>(j["encoding"], encoding_from_name);
        }
        if (j.contains("observable")) {
            c.observables = one_or_many<Observable>(
                j["observable"], [](const std::string &s) { return Observable::from_name(s); });
        }
        c.num_pairs = j.value("num_pairs", c.num_pairs);
        c.master_seed = j.value("seed", std::uint64_t{0});
        c.max_cell_work = j.value("max_cell_work", std::uint64_t{0});
        if (j.contains("options")) {
            const json &o = j["options"];
            reject_unknown(o, {"diagonal", "redraw_params", "entangler", "bootstrap_resamples"},
                           "options");
            c.options.diagonal = o.value("diagonal", false);
            c.options.redraw_params = o.value("redraw_params", false);
            const std::string ent = o.value("entangler", std::string("chain"));
            if (ent != "chain" && ent != "ring") {
                throw std::invalid_argument("entangler must be chain or ring, got '" + ent + "'");
            }
            c.options.entangler = ent == "ring" ? Entangler::Ring : Entangler::Chain;
            c.options.bootstrap_resamples =
                o.value("bootstrap_resamples", c.options.bootstrap_resamples);
        }
    } catch (const json::exception &e) {
        throw std::invalid_argument(std::string("malformed sweep config: ") + e.what());
    }
    validate(c);
    return c;
}

json canonical_json(const SweepConfig &c) {
    json j;
    j["n_values"] = c.n_values;
    j["d_values"] = c.d_values;
    j["d_scale"] = c.d_values.empty() ? c.d_scale : 0.0;
    json encs = json::array();
    for (auto e : c.encodings) {
        encs.push_back(to_string(e));
    }
    j["encoding"] = encs;
    json obs = json::array();
    for (const auto &o : c.observables) {
        obs.push_back(o.name());
    }
    j["observable"] = obs;
    j["num_pairs"] = c.num_pairs;
    j["seed"] = c.master_seed;
    j["max_cell_work"] = c.max_cell_work;
    j["options"] = {
        {"diagonal", c.options.diagonal},
        {"redraw_params", c.options.redraw_params},
        {"entangler", c.options.entangler == Entangler::Ring ? "ring" : "chain"},
        {"bootstrap_resamples", c.options.bootstrap_resamples},
    };
    return j;
}

std::string sha256_hex(const std::string &data) {
    std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
    unsigned int len = 0;
    if (EVP_Digest(data.data(), data.size(), digest.data(), &len, EVP_sha256(), nullptr) != 1) {
        throw std::runtime_error("SHA-256 digest failed");
    }
    static constexpr char hex[] = "0123456789abcdef";
    std::string out;
    for (unsigned int i = 0; i < len; ++i) {
        out += hex[digest[i] >> 4];
        out += hex[digest[i] & 0xF];
    }
    return out;
}

std::string config_hash(const SweepConfig &config) {
    return sha256_hex(canonical_json(config).dump());
}

json to_json(const RunManifest &m) {
    json cells = json::array();
    for (const auto &c : m.cells) {
        cells.push_back({{"n", c.key.n},
                         {"d", c.key.d},
                         {"encoding", to_string(c.key.encoding)},
                         {"observable", c.key.observable.name()},
                         {"status", c.status}});
    }
    return {{"config_hash", m.config_hash},   {"master_seed", m.master_seed},
            {"tool_version", m.tool_version}, {"start_time", m.start_time},
            {"end_time", m.end_time},         {"cells", cells}};
}

std::string utc_timestamp() {
    const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    std::array<char, 32> buf{};
    std::strftime(buf.data(), buf.size(), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf.data();
}

} // namespace qntk
