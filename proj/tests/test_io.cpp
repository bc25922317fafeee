// SPDX-License-Identifier: Apache-2.0
//
// spmpcast - max-min fair multicast beamforming with joint antenna selection
// Copyright (C) 2026 spmpcast developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <unistd.h>

#include "spmpcast/bench.hpp"

#include "test_util.hpp"

using namespace spmpcast;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() /
               ("spmpcast_test_" + std::to_string(::getpid()) + "_" +
                std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string file(const std::string &name) const { return (path / name).string(); }
};

std::string slurp(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::vector<std::string> split(const std::string &s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    out.push_back(cur);
    return out;
}

} // namespace

TEST_CASE("instance files round-trip and rewrite byte-identically") {
    TempDir dir;
    auto inst = testutil::random_instance(5, 3, 10.0, 900);
    const std::string path = dir.file("inst.json");
    write_instance(path, inst, {{"seed", 900}});
    const std::string first = slurp(path);
    write_instance(path, inst, {{"seed", 900}});
    CHECK(slurp(path) == first);

    InstanceData data = read_instance(path);
    CHECK(data.instance.n_antennas == 5);
    CHECK(data.instance.n_users == 3);
    CHECK(data.instance.power == 10.0);
    CHECK(data.generator["seed"] == 900);
    for (std::size_t m = 0; m < 3; ++m)
        for (std::size_t i = 0; i < 5; ++i)
            CHECK(data.instance.channels[m][i] == inst.channels[m][i]); // exact round trip
}

TEST_CASE("read_instance failure modes") {
    TempDir dir;
    CHECK_THROWS_AS(read_instance(dir.file("missing.json")), parse_error);

    const std::string bad = dir.file("bad.json");
    write_text(bad, "{ not json");
    CHECK_THROWS_AS(read_instance(bad), parse_error);

    write_text(bad, R"({"format_version":1,"n":2,"m":1,"power":1.0,"noise_vars":[1.0]})");
    CHECK_THROWS_AS(read_instance(bad), parse_error); // channels missing

    write_text(bad,
               R"({"format_version":9,"n":1,"m":1,"power":1.0,"noise_vars":[1.0],"channels":[[[1,0]]]})");
    CHECK_THROWS_AS(read_instance(bad), parse_error); // wrong version

    write_text(bad,
               R"({"format_version":1,"n":1,"m":1,"power":-2.0,"noise_vars":[1.0],"channels":[[[1,0]]]})");
    CHECK_THROWS_AS(read_instance(bad), parse_error); // invalid power
}

TEST_CASE("result rows: csv and json carry identical values") {
    ResultRow row;
    row.trial = 3;
    row.k = 5;
    row.method = "spmp-sca";
    row.min_snr_db = 12.3456789012345;
    row.subset = {0, 2, 7};
    row.lambda_star = 0.625;
    row.sca_iters = 40;
    row.mp_iters = 12345;
    row.wall_ms = 17.25;

    const std::string line = to_csv_line(row);
    auto cells = split(line, ',');
    REQUIRE(cells.size() == 10);
    CHECK(cells[0] == "1");
    CHECK(cells[1] == "3");
    CHECK(cells[2] == "5");
    CHECK(cells[3] == "spmp-sca");
    CHECK(cells[5] == "0;2;7");

    nlohmann::json j = to_json(row);
    CHECK(std::stod(cells[4]) == j["min_snr_db"].get<double>());
    CHECK(std::stod(cells[6]) == j["lambda_star"].get<double>());
    CHECK(std::stod(cells[9]) == j["wall_ms"].get<double>());
    CHECK(cells[7] == std::to_string(j["sca_iters"].get<std::size_t>()));

    // NaN lambda -> empty cell and null
    row.lambda_star = std::numeric_limits<double>::quiet_NaN();
    auto cells2 = split(to_csv_line(row), ',');
    CHECK(cells2[6].empty());
    CHECK(to_json(row)["lambda_star"].is_null());
}

TEST_CASE("aggregate means") {
    std::vector<ResultRow> rows(4);
    for (std::size_t i = 0; i < 4; ++i) {
        rows[i].trial = i;
        rows[i].k = 2;
        rows[i].method = "spmp-sca";
        rows[i].min_snr_db = static_cast<double>(i + 1); // 1, 2, 3, 4
        rows[i].wall_ms = 10.0 * static_cast<double>(i + 1);
    }
    rows[3].error = "boom"; // excluded
    auto aggs = aggregate(rows);
    REQUIRE(aggs.size() == 1);
    CHECK(aggs[0].count == 3);
    CHECK(aggs[0].mean_snr_db == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(aggs[0].mean_time_ms == doctest::Approx(20.0).epsilon(1e-12));
}

TEST_CASE("run_gen: deterministic files, validation errors") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.channel.n_antennas = 4;
    cfg.channel.n_users = 2;
    cfg.channel.seed = 42;
    cfg.trials = 2;
    cfg.power = 10.0;
    cfg.out = dir.file("gen");

    auto paths = run_gen(cfg);
    REQUIRE(paths.size() == 2);
    const std::string first = slurp(paths[0]);
    CHECK(!first.empty());

    auto paths2 = run_gen(cfg);
    CHECK(slurp(paths2[0]) == first); // byte-identical rerun

    cfg.trials = 0;
    CHECK_THROWS_AS(run_gen(cfg), validation_error);
}

TEST_CASE("run_solve writes both formats with identical values") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.channel.n_antennas = 4;
    cfg.channel.n_users = 2;
    cfg.channel.seed = 5;
    cfg.trials = 1;
    cfg.power = 1.0;
    cfg.sca.sca_iters = 4;
    cfg.sca.mp_iters = 200;
    cfg.sca.seed = 5;
    cfg.out = dir.file("gen");
    auto paths = run_gen(cfg);

    cfg.timing = false;
    cfg.format = "json";
    cfg.out = dir.file("res.json");
    SelectionResult res_json = run_solve(paths[0], 2, cfg);

    cfg.format = "csv";
    cfg.out = dir.file("res.csv");
    SelectionResult res_csv = run_solve(paths[0], 2, cfg);

    CHECK(res_json.min_snr_db == res_csv.min_snr_db); // deterministic resolve

    nlohmann::json doc = nlohmann::json::parse(slurp(dir.file("res.json")));
    auto lines = split(slurp(dir.file("res.csv")), '\n');
    REQUIRE(lines.size() >= 2);
    CHECK(lines[0] == kResultsCsvHeader);
    auto cells = split(lines[1], ',');
    CHECK(std::stod(cells[4]) == doc["result"]["min_snr_db"].get<double>());
    CHECK(std::stod(cells[6]) == doc["result"]["lambda_star"].get<double>());
    CHECK(doc["result"]["wall_ms"] == 0.0); // --no-timing zeroes the field

    CHECK_THROWS_AS(run_solve(paths[0], 9, cfg), validation_error);
}

TEST_CASE("run_bench: deterministic outputs, csv/json value equality") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.channel.n_antennas = 4;
    cfg.channel.n_users = 2;
    cfg.channel.seed = 77;
    cfg.sca.sca_iters = 3;
    cfg.sca.mp_iters = 150;
    cfg.trials = 2;
    cfg.k_values = {1, 4};
    cfg.power = 1.0;
    cfg.timing = false;
    cfg.workers = 2;
    cfg.out = dir.file("bench");

    auto rows = run_bench(cfg);
    REQUIRE(rows.size() == 4);
    for (const auto &row : rows)
        CHECK(row.error.empty());

    const std::string csv1 = slurp(dir.file("bench.csv"));
    const std::string json1 = slurp(dir.file("bench.json"));
    run_bench(cfg);
    CHECK(slurp(dir.file("bench.csv")) == csv1);   // byte-identical rerun
    CHECK(slurp(dir.file("bench.json")) == json1); // including row order

    // rows appear in (trial, K) order and values match across formats
    auto lines = split(csv1, '\n');
    REQUIRE(lines.size() >= 5);
    CHECK(lines[0] == kResultsCsvHeader);
    nlohmann::json doc = nlohmann::json::parse(json1);
    REQUIRE(doc["rows"].size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        auto cells = split(lines[1 + i], ',');
        CHECK(std::stoul(cells[1]) == doc["rows"][i]["trial"].get<std::size_t>());
        CHECK(std::stoul(cells[2]) == doc["rows"][i]["k"].get<std::size_t>());
        CHECK(std::stod(cells[4]) == doc["rows"][i]["min_snr_db"].get<double>());
    }
    CHECK(doc["rows"][0]["trial"] == 0);
    CHECK(doc["rows"][0]["k"] == 1);
    CHECK(doc["rows"][1]["k"] == 4);

    // aggregate means equal the arithmetic means of the rows
    nlohmann::json aggs = doc["aggregate"];
    for (const auto &agg : aggs) {
        double acc = 0.0;
        std::size_t cnt = 0;
        for (const auto &row : doc["rows"])
            if (row["k"] == agg["k"]) {
                acc += row["min_snr_db"].get<double>();
                cnt += 1;
            }
        CHECK(agg["count"] == cnt);
        CHECK(std::abs(agg["mean_snr_db"].get<double>() - acc / cnt) <= 1e-12);
    }

    cfg.k_values = {9};
    CHECK_THROWS_AS(run_bench(cfg), validation_error);
}

TEST_CASE("run_oracle on a single-user file takes the analytic path") {
    TempDir dir;
    ExperimentConfig cfg;
    cfg.channel.n_antennas = 4;
    cfg.channel.n_users = 1;
    cfg.channel.seed = 13;
    cfg.trials = 1;
    cfg.power = 10.0;
    cfg.out = dir.file("gen");
    auto paths = run_gen(cfg);

    cfg.out = dir.file("oracle.json");
    cfg.timing = false;
    OracleResult res = run_oracle(paths[0], 2, cfg);
    CHECK(res.method == "analytic");
    nlohmann::json doc = nlohmann::json::parse(slurp(dir.file("oracle.json")));
    CHECK(doc["oracle_method"] == "analytic");
    CHECK(doc["row"]["method"] == "oracle");
}
