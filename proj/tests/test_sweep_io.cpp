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
#include <limits>
#include <sstream>
#include <stdexcept>

#include "catch_amalgamated.hpp"

#include "qntk/sweep_io.hpp"

using namespace qntk;
using nlohmann::json;

namespace {

ExperimentRecord sample_record(RngStream &rng) {
    ExperimentRecord r;
    r.n = 1 + rng.below(12);
    r.d = 1 + rng.below(200);
    r.lambda = 2 * r.n * r.d;
    r.encoding = rng.below(2) ? Encoding::GlobalHaar : Encoding::LocalHaarProduct;
    r.observable = rng.below(2) ? Observable::zero_projector() : Observable::pauli(PauliAxis::Y, 0);
    r.num_pairs = 2 + rng.below(1000);
    r.mean_k = rng.normal() * std::exp2(-rng.uniform(0.0, 60.0));
    r.se_mean = rng.uniform() / 3.0;
    r.var_k = std::exp2(-rng.uniform(0.0, 60.0));
    r.se_var = rng.uniform() * 1e-7;
    r.bound_var = std::exp2(rng.uniform(-40.0, 10.0));
    r.seed = rng.engine()();
    return r;
}

bool same_record(const ExperimentRecord &a, const ExperimentRecord &b) {
    return a.n == b.n && a.d == b.d && a.lambda == b.lambda && a.encoding == b.encoding &&
           a.observable == b.observable && a.num_pairs == b.num_pairs && a.mean_k == b.mean_k &&
           a.se_mean == b.se_mean && a.var_k == b.var_k && a.se_var == b.se_var &&
           a.bound_var == b.bound_var && a.seed == b.seed;
}

} // namespace

TEST_CASE("CSV header and number format", "[sweep_io]") {
    std::ostringstream out;
    write_csv(out, {});
    CHECK(out.str() ==
          "n,d,lambda,encoding,observable,num_pairs,mean_k,se_mean,var_k,se_var,bound_var,seed\n");

    CHECK(format_double(0.1) == "0.10000000000000001");
    CHECK(format_double(4096.0 / 65025.0) == "0.062991157247212617");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
}

TEST_CASE("CSV round-trips exactly", "[sweep_io][property]") {
    RngStream rng{314};
    std::vector<ExperimentRecord> recs;
    for (int i = 0; i < 200; ++i) {
        recs.push_back(sample_record(rng));
    }
    std::stringstream io;
    write_csv(io, recs);
    const auto back = read_csv(io);
    REQUIRE(back.size() == recs.size());
    for (std::size_t i = 0; i < recs.size(); ++i) {
        CHECK(same_record(recs[i], back[i]));
    }

    std::istringstream bad_header("n,d\n");
    REQUIRE_THROWS(read_csv(bad_header));
    std::istringstream short_row(std::string(kCsvHeader) + "\n1,2,3\n");
    REQUIRE_THROWS(read_csv(short_row));
}

TEST_CASE("sweep_config_from_json", "[sweep_io]") {
    const json j = {{"n_values", {4, 5}},
                    {"d_values", {5, 20}},
                    {"encoding", {"global_haar", "local_haar"}},
                    {"observable", "pauli_y0"},
                    {"num_pairs", 50},
                    {"seed", 9},
                    {"options", {{"entangler", "ring"}, {"bootstrap_resamples", 100}}},
                    {"out", "x.csv"}};
    const auto c = sweep_config_from_json(j);
    CHECK(c.n_values == std::vector<std::size_t>{4, 5});
    CHECK(c.d_values == std::vector<std::size_t>{5, 20});
    CHECK(c.encodings.size() == 2);
    CHECK(c.observables == std::vector<Observable>{Observable::pauli(PauliAxis::Y, 0)});
    CHECK(c.num_pairs == 50);
    CHECK(c.master_seed == 9);
    CHECK(c.options.entangler == Entangler::Ring);
    CHECK(c.options.bootstrap_resamples == 100);

    SECTION("defaults") {
        const auto m = sweep_config_from_json({{"n_values", {4}}});
        CHECK(m.d_values.empty());
        CHECK(m.num_pairs == 200);
        CHECK(m.encodings == std::vector<Encoding>{Encoding::GlobalHaar});
        CHECK(m.observables == std::vector<Observable>{Observable::zero_projector()});
    }
    SECTION("rejections") {
        REQUIRE_THROWS_WITH(sweep_config_from_json({{"n_values", {4}}, {"pairs", 3}}),
                            Catch::Matchers::ContainsSubstring("unknown key 'pairs'"));
        REQUIRE_THROWS_AS(sweep_config_from_json({{"n_values", {4}}, {"options", {{"x", 1}}}}),
                          std::invalid_argument);
        REQUIRE_THROWS_AS(sweep_config_from_json({{"n_values", "four"}}), std::invalid_argument);
        REQUIRE_THROWS_AS(sweep_config_from_json(json::array()), std::invalid_argument);
        REQUIRE_THROWS_WITH(sweep_config_from_json({{"n_values", {20}}}),
                            Catch::Matchers::ContainsSubstring("1 <= n <= 12"));
    }
}

TEST_CASE("config_hash", "[sweep_io]") {
    CHECK(sha256_hex("abc") == "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");

    const json base = {{"n_values", {4, 5}}, {"seed", 1}};
    const auto h = config_hash(sweep_config_from_json(base));
    CHECK(h.size() == 64);
    CHECK(h == config_hash(sweep_config_from_json(base)));

    json with_out = base;
    with_out["out"] = "elsewhere.csv";
    CHECK(config_hash(sweep_config_from_json(with_out)) == h);

    json other_seed = base;
    other_seed["seed"] = 2;
    CHECK(config_hash(sweep_config_from_json(other_seed)) != h);

    json other_pairs = base;
    other_pairs["num_pairs"] = 199;
    CHECK(config_hash(sweep_config_from_json(other_pairs)) != h);
}

TEST_CASE("Run manifest", "[sweep_io]") {
    RunManifest m;
    m.config_hash = "abc";
    m.master_seed = 5;
    m.start_time = utc_timestamp();
    m.end_time = m.start_time;
    m.cells.push_back({{4, 4, Encoding::GlobalHaar, Observable::zero_projector()}, "ok"});
    const json j = to_json(m);
    CHECK(j["tool_version"] == kToolVersion);
    CHECK(j["master_seed"] == 5);
    CHECK(j["cells"][0]["status"] == "ok");
    CHECK(j["cells"][0]["observable"] == "zero_projector");
    CHECK(m.start_time.size() == 20);
    CHECK(m.start_time.back() == 'Z');
}
