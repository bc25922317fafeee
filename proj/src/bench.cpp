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

#include "spmpcast/bench.hpp"

#include <chrono>
#include <cmath>
#include <filesystem>

#include "spmpcast/parallel.hpp"

namespace spmpcast {

using nlohmann::json;

namespace {

constexpr std::uint64_t kBenchSalt = 0x42454E43ULL; // per-task seed stream tag

void validate_common(const ExperimentConfig &cfg) {
    validate(cfg.channel);
    if (!(cfg.power > 0.0))
        throw validation_error("config: power must be positive");
    if (cfg.trials < 1)
        throw validation_error("config: trials must be at least 1");
    for (std::size_t k : cfg.k_values)
        if (k < 1 || k > cfg.channel.n_antennas)
            throw validation_error("config: K values must lie in [1, N]");
    if (cfg.format != "json" && cfg.format != "csv")
        throw validation_error("config: format must be json or csv");
}

json selection_to_json(const SelectionResult &res, bool timing) {
    json trace = json::array();
    for (const auto &p : res.bisection_trace)
        trace.push_back({{"lambda", p.lambda}, {"active", p.active}, {"objective", p.objective}});
    json w = json::array();
    for (const auto &v : res.beamformer)
        w.push_back(json::array({v.real(), v.imag()}));
    return json{
        {"selected", res.selected},
        {"beamformer", std::move(w)},
        {"min_snr_linear", res.min_snr_linear},
        {"min_snr_db", res.min_snr_db},
        {"lambda_star", res.lambda_star},
        {"exact_k", res.exact_k},
        {"bisection_trace", std::move(trace)},
        {"sca_iters", res.total_sca_iters},
        {"mp_iters", res.total_mp_iters},
        {"wall_ms", timing ? res.wall_ms : 0.0},
    };
}

std::string instance_path(const ExperimentConfig &cfg, std::size_t trial) {
    std::filesystem::path dir = cfg.out.empty() ? "." : cfg.out;
    return (dir / ("instance_" + std::to_string(trial) + ".json")).string();
}

} // namespace

json config_to_json(const ExperimentConfig &cfg) {
    return json{
        {"n", cfg.channel.n_antennas},
        {"m", cfg.channel.n_users},
        {"paths_min", cfg.channel.paths_min},
        {"paths_max", cfg.channel.paths_max},
        {"noise_var", cfg.channel.noise_var},
        {"seed", cfg.channel.seed},
        {"power", cfg.power},
        {"k", cfg.k_values},
        {"trials", cfg.trials},
        {"sca_iters", cfg.sca.sca_iters},
        {"mp_iters", cfg.sca.mp_iters},
        {"gap_tol", cfg.sca.gap_tol},
        {"tau_rel", cfg.sca.tau_rel},
        {"resolve_restarts", cfg.sca.resolve_restarts},
        {"warm_start", cfg.sca.warm_start},
        {"lambda_lb", cfg.bisection.lambda_lb},
        {"lambda_ub", cfg.bisection.lambda_ub},
        {"max_depth", cfg.bisection.max_depth},
        {"oracle_restarts", cfg.oracle_restarts},
        {"oracle_cap", cfg.oracle_cap},
        {"workers", cfg.workers},
        {"format", cfg.format},
        {"timing", cfg.timing},
    };
}

std::vector<std::string> run_gen(const ExperimentConfig &cfg) {
    validate_common(cfg);
    if (!cfg.out.empty())
        std::filesystem::create_directories(cfg.out);

    std::vector<std::string> paths;
    paths.reserve(cfg.trials);
    for (std::size_t trial = 0; trial < cfg.trials; ++trial) {
        ProblemInstance inst = draw_instance(cfg.channel, trial, cfg.power);
        json generator = {
            {"model", "multipath-ula"},
            {"seed", cfg.channel.seed},
            {"trial", trial},
            {"paths_min", cfg.channel.paths_min},
            {"paths_max", cfg.channel.paths_max},
        };
        const std::string path = instance_path(cfg, trial);
        try {
            write_instance(path, inst, generator);
        } catch (const std::exception &e) {
            throw std::runtime_error(std::string("gen: ") + e.what());
        }
        paths.push_back(path);
    }
    return paths;
}

SelectionResult run_solve(const std::string &instance_path, std::size_t k,
                          const ExperimentConfig &cfg) {
    InstanceData data = read_instance(instance_path);
    const ProblemInstance &inst = data.instance;
    if (k < 1 || k > inst.n_antennas)
        throw validation_error("solve: K must lie in [1, N]");

    SelectionResult res = solve_joint(inst, k, cfg.sca, cfg.bisection);
    if (!cfg.timing)
        res.wall_ms = 0.0;

    if (!cfg.out.empty()) {
        if (cfg.format == "csv") {
            ResultRow row;
            row.trial = 0;
            row.k = k;
            row.method = "spmp-sca";
            row.min_snr_db = res.min_snr_db;
            row.subset = res.selected;
            row.lambda_star = res.lambda_star;
            row.sca_iters = res.total_sca_iters;
            row.mp_iters = res.total_mp_iters;
            row.wall_ms = cfg.timing ? res.wall_ms : 0.0;
            write_rows_csv(cfg.out, {row});
        } else {
            json doc = {
                {"format_version", kResultsFormatVersion},
                {"config", config_to_json(cfg)},
                {"k", k},
                {"instance", instance_path},
                {"result", selection_to_json(res, cfg.timing)},
            };
            write_text(cfg.out, doc.dump(2) + "\n");
        }
    }
    return res;
}

std::vector<ResultRow> run_bench(const ExperimentConfig &cfg) {
    validate_common(cfg);
    if (cfg.k_values.empty())
        throw validation_error("bench: at least one K value required");

    const std::size_t n_tasks = cfg.trials * cfg.k_values.size();
    std::vector<ResultRow> rows(n_tasks);

    parallel_for(n_tasks, cfg.workers, [&](std::size_t task) {
        const std::size_t trial = task / cfg.k_values.size();
        const std::size_t k = cfg.k_values[task % cfg.k_values.size()];
        ResultRow &row = rows[task];
        row.trial = trial;
        row.k = k;
        row.method = "spmp-sca";
        try {
            const ProblemInstance inst = draw_instance(cfg.channel, trial, cfg.power);
            ScaConfig sca = cfg.sca;
            sca.seed = derive_stream(derive_stream(cfg.channel.seed ^ kBenchSalt, trial), k);
            const auto t0 = std::chrono::steady_clock::now();
            SelectionResult res = solve_joint(inst, k, sca, cfg.bisection);
            const double wall =
                std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
                    .count();
            row.min_snr_db = res.min_snr_db;
            row.subset = res.selected;
            row.lambda_star = res.lambda_star;
            row.sca_iters = res.total_sca_iters;
            row.mp_iters = res.total_mp_iters;
            row.wall_ms = cfg.timing ? wall : 0.0;
        } catch (const std::exception &e) {
            row.error = e.what();
            row.min_snr_db = std::numeric_limits<double>::quiet_NaN();
        }
    });

    const std::vector<AggregateRow> aggs = aggregate(rows);

    const std::string prefix = cfg.out.empty() ? "bench_results" : cfg.out;
    if (auto parent = std::filesystem::path(prefix).parent_path(); !parent.empty())
        std::filesystem::create_directories(parent);
    write_rows_csv(prefix + ".csv", rows);
    write_aggregate_csv(prefix + "_agg.csv", aggs);

    json rows_json = json::array();
    for (const auto &row : rows)
        rows_json.push_back(to_json(row));
    json aggs_json = json::array();
    for (const auto &agg : aggs)
        aggs_json.push_back(to_json(agg));
    json doc = {
        {"format_version", kResultsFormatVersion},
        {"config", config_to_json(cfg)},
        {"rows", std::move(rows_json)},
        {"aggregate", std::move(aggs_json)},
    };
    write_text(prefix + ".json", doc.dump(2) + "\n");

    return rows;
}

OracleResult run_oracle(const std::string &instance_path, std::size_t k,
                        const ExperimentConfig &cfg) {
    InstanceData data = read_instance(instance_path);
    const ProblemInstance &inst = data.instance;
    if (k < 1 || k > inst.n_antennas)
        throw validation_error("oracle: K must lie in [1, N]");

    const auto t0 = std::chrono::steady_clock::now();
    OracleResult res;
    if (inst.n_users == 1) {
        res = single_user_optimum(inst.channels[0], inst.noise_vars[0], inst.power, k);
    } else {
        ExhaustiveOptions opts;
        opts.restarts = cfg.oracle_restarts;
        opts.subset_cap = cfg.oracle_cap;
        opts.workers = cfg.workers;
        res = exhaustive_subsets(inst, k, cfg.sca, opts);
    }
    const double wall =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    if (!cfg.out.empty()) {
        ResultRow row;
        row.trial = 0;
        row.k = k;
        row.method = "oracle";
        row.min_snr_db = res.min_snr_db;
        row.subset = res.subset;
        row.sca_iters = 0;
        row.mp_iters = 0;
        row.wall_ms = cfg.timing ? wall : 0.0;
        if (cfg.format == "csv") {
            write_rows_csv(cfg.out, {row});
        } else {
            json doc = {
                {"format_version", kResultsFormatVersion},
                {"config", config_to_json(cfg)},
                {"k", k},
                {"instance", instance_path},
                {"oracle_method", res.method},
                {"row", to_json(row)},
            };
            write_text(cfg.out, doc.dump(2) + "\n");
        }
    }
    return res;
}

} // namespace spmpcast
