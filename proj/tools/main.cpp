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
//
// CLI: gen | solve | bench | oracle. Flag precedence: command line over
// --config file over built-in defaults (CLI11 handles the first two).
// Exit codes: 0 ok, 2 validation, 3 input parse failure, 4 runtime failure.

#include "CLI11.hpp"

#include <cstdio>
#include <string>

#include "spmpcast/bench.hpp"
#include "spmpcast/kernels.hpp"

namespace {

using spmpcast::ExperimentConfig;

// "5" or "2-6" (inclusive range) per occurrence.
std::vector<std::size_t> parse_k_values(const std::vector<std::string> &tokens) {
    std::vector<std::size_t> out;
    for (const auto &tok : tokens) {
        const auto dash = tok.find('-');
        try {
            if (dash == std::string::npos) {
                out.push_back(std::stoul(tok));
            } else {
                const std::size_t lo = std::stoul(tok.substr(0, dash));
                const std::size_t hi = std::stoul(tok.substr(dash + 1));
                if (hi < lo)
                    throw spmpcast::validation_error("--k range must be ascending: " + tok);
                for (std::size_t k = lo; k <= hi; ++k)
                    out.push_back(k);
            }
        } catch (const std::invalid_argument &) {
            throw spmpcast::validation_error("cannot parse --k value: " + tok);
        }
    }
    return out;
}

struct CliExtra {
    std::vector<std::string> k_tokens;
    std::string kernels;
};

void add_common_options(CLI::App *cmd, ExperimentConfig &cfg, CliExtra &extra) {
    auto &k_tokens = extra.k_tokens;
    cmd->set_config("--config", "", "read defaults from a key=value config file");
    cmd->add_option("--n", cfg.channel.n_antennas, "transmit antennas N");
    cmd->add_option("--m", cfg.channel.n_users, "users M");
    cmd->add_option("--k", k_tokens, "selection target(s); repeatable, ranges like 2-6")
        ->take_all();
    cmd->add_option("--power", cfg.power, "total power budget P (linear)");
    cmd->add_option("--noise-var", cfg.channel.noise_var, "per-user noise variance");
    cmd->add_option("--trials", cfg.trials, "Monte-Carlo trials");
    cmd->add_option("--seed", cfg.channel.seed, "base RNG seed");
    cmd->add_option("--sca-iters", cfg.sca.sca_iters, "SCA outer iterations");
    cmd->add_option("--mp-iters", cfg.sca.mp_iters, "mirror-prox iterations per subproblem");
    cmd->add_option("--gap-tol", cfg.sca.gap_tol,
                    "absolute duality-gap tolerance (negative: relative default)");
    cmd->add_option("--lambda-lb", cfg.bisection.lambda_lb, "bisection lower bound");
    cmd->add_option("--lambda-ub", cfg.bisection.lambda_ub, "bisection upper bound");
    cmd->add_option("--max-depth", cfg.bisection.max_depth, "bisection depth limit");
    cmd->add_option("--tau-rel", cfg.sca.tau_rel, "relative active-group threshold");
    cmd->add_option("--restarts", cfg.sca.resolve_restarts, "final re-solve restarts");
    cmd->add_option("--oracle-restarts", cfg.oracle_restarts, "oracle restarts per subset");
    cmd->add_option("--oracle-cap", cfg.oracle_cap, "max subsets the oracle will enumerate");
    cmd->add_option("--workers", cfg.workers,
                    "worker threads (0: SPMPCAST_WORKERS env or hardware)");
    cmd->add_option("--out", cfg.out, "output path (bench: prefix; gen: directory)");
    cmd->add_option("--format", cfg.format, "output format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_flag("--warm-start", cfg.sca.warm_start, "warm-start bisection probes");
    cmd->add_flag("--timing,!--no-timing", cfg.timing,
                  "--no-timing zeroes wall-time fields in outputs");
    cmd->add_option("--kernels", extra.kernels, "force kernel variant: scalar, avx2, or auto")
        ->check(CLI::IsMember({"scalar", "avx2", "auto"}));
}

void finalize(ExperimentConfig &cfg, const CliExtra &extra) {
    if (!extra.k_tokens.empty())
        cfg.k_values = parse_k_values(extra.k_tokens);
    cfg.sca.seed = cfg.channel.seed;
    if (!extra.kernels.empty() && !spmpcast::kernels::set_active(extra.kernels))
        throw spmpcast::validation_error("kernel variant not available: " + extra.kernels);
}

std::size_t single_k(const ExperimentConfig &cfg) {
    if (cfg.k_values.size() != 1)
        throw spmpcast::validation_error("this command needs exactly one --k value");
    return cfg.k_values.front();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"max-min fair multicast beamforming with joint antenna selection"};
    app.require_subcommand(1);

    ExperimentConfig cfg;
    CliExtra extra;

    CLI::App *gen = app.add_subcommand("gen", "generate instance files");
    CLI::App *solve = app.add_subcommand("solve", "solve one instance file");
    CLI::App *bench = app.add_subcommand("bench", "Monte-Carlo sweep over trials and K");
    CLI::App *oracle = app.add_subcommand("oracle", "reference solver on one instance file");

    std::string instance_file;
    for (CLI::App *cmd : {gen, solve, bench, oracle})
        add_common_options(cmd, cfg, extra);
    solve->add_option("instance", instance_file, "instance file")->required();
    oracle->add_option("instance", instance_file, "instance file")->required();

    try {
        app.parse(argc, argv);
        finalize(cfg, extra);

        if (gen->parsed()) {
            const auto paths = spmpcast::run_gen(cfg);
            std::printf("wrote %zu instance file(s) under %s\n", paths.size(),
                        cfg.out.empty() ? "." : cfg.out.c_str());
        } else if (solve->parsed()) {
            const auto res = spmpcast::run_solve(instance_file, single_k(cfg), cfg);
            std::string subset;
            for (std::size_t i = 0; i < res.selected.size(); ++i)
                subset += (i ? "," : "") + std::to_string(res.selected[i]);
            std::printf("k=%zu selected=[%s] min_snr=%.4f dB lambda=%.6g exact_k=%d\n",
                        single_k(cfg), subset.c_str(), res.min_snr_db, res.lambda_star,
                        res.exact_k ? 1 : 0);
        } else if (bench->parsed()) {
            const auto rows = spmpcast::run_bench(cfg);
            std::size_t failed = 0;
            for (const auto &row : rows)
                failed += row.error.empty() ? 0 : 1;
            std::printf("bench: %zu rows (%zu failed) -> %s.{csv,json}\n", rows.size(), failed,
                        cfg.out.empty() ? "bench_results" : cfg.out.c_str());
        } else if (oracle->parsed()) {
            const auto res = spmpcast::run_oracle(instance_file, single_k(cfg), cfg);
            std::string subset;
            for (std::size_t i = 0; i < res.subset.size(); ++i)
                subset += (i ? "," : "") + std::to_string(res.subset[i]);
            std::printf("oracle(%s): subset=[%s] min_snr=%.4f dB\n", res.method.c_str(),
                        subset.c_str(), res.min_snr_db);
        }
        return 0;
    } catch (const CLI::ParseError &e) {
        return app.exit(e) == 0 ? 0 : 2;
    } catch (const spmpcast::validation_error &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    } catch (const spmpcast::parse_error &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 3;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 4;
    }
}
