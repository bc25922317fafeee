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

#pragma once

#include "spmpcast/channelgen.hpp"
#include "spmpcast/instance_io.hpp"
#include "spmpcast/oracle.hpp"
#include "spmpcast/results.hpp"
#include "spmpcast/select.hpp"

namespace spmpcast {

// Everything a CLI invocation resolves to. The command entry points below
// hold the actual logic; tools/main.cpp only parses flags into this struct.
struct ExperimentConfig {
    ChannelModelConfig channel;
    double power = 10.0;
    std::vector<std::size_t> k_values;
    std::size_t trials = 1;
    ScaConfig sca;
    BisectionConfig bisection;
    std::size_t oracle_restarts = 5;
    std::uint64_t oracle_cap = 10000;
    std::size_t workers = 0;     // 0 -> SPMPCAST_WORKERS env or hardware
    std::string out;             // output directory (gen) or path prefix
    std::string format = "json"; // solve/oracle output format
    bool timing = true;          // false zeroes all wall-time fields
};

// Effective configuration echoed into JSON outputs.
nlohmann::json config_to_json(const ExperimentConfig &cfg);

// Writes trials instance files <out>/instance_<trial>.json; returns paths.
std::vector<std::string> run_gen(const ExperimentConfig &cfg);

// Joint solve on one instance file. Writes <out> when set (format csv:
// fixed-header single row; json: result with config echo and traces).
SelectionResult run_solve(const std::string &instance_path, std::size_t k,
                          const ExperimentConfig &cfg);

// Monte-Carlo sweep over (trial, K). Emits <prefix>.csv (rows),
// <prefix>_agg.csv (per-K means) and <prefix>.json (config, rows,
// aggregates). Per-task failures are recorded on their row; the run
// continues. Returns the rows in (trial, K) order.
std::vector<ResultRow> run_bench(const ExperimentConfig &cfg);

// Oracle on one instance file: analytic when M == 1, exhaustive otherwise.
OracleResult run_oracle(const std::string &instance_path, std::size_t k,
                        const ExperimentConfig &cfg);

} // namespace spmpcast
