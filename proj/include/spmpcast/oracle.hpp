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

#include "spmpcast/select.hpp"

namespace spmpcast {

// Reference solvers for desk-scale validation: a closed-form single-user
// optimum and an exhaustive search over antenna subsets. The exhaustive
// path solves each subset's beamforming problem with multi-restart SCA, so
// it is a strong heuristic bound rather than a certified global optimum,
// except at M = 1 where the analytic answer is exact.

struct OracleResult {
    std::vector<std::size_t> subset; // best subset, ascending
    double min_snr_linear = 0.0;
    double min_snr_db = 0.0;
    CVec beamformer;    // padded to N antennas
    std::string method; // "analytic" | "exhaustive-sca"
    // (subset, best min-SNR) per enumerated subset, lexicographic order;
    // filled only when requested.
    std::vector<std::pair<std::vector<std::size_t>, double>> per_subset;
};

struct ExhaustiveOptions {
    std::size_t restarts = 5;
    std::uint64_t subset_cap = 10000; // refuse larger enumerations
    std::size_t workers = 0;          // 0 -> default_workers()
    bool keep_per_subset = false;
};

// C(n, k); throws validation_error if the value would overflow 64 bits.
std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

// Top-K antennas by |h_i| (ties -> lower index); matched filter on the
// support at full power; min-SNR = P * (sum of selected |h_i|^2) / sigma^2.
OracleResult single_user_optimum(const CVec &h, double noise_var, double power, std::size_t k);

// Lexicographic enumeration of all K-subsets; each subset solved by
// sca_solve(lambda = 0) with resolve_restart_seed(cfg.seed, r) restarts
// (the same streams solve_joint's final re-solve uses). Ties on value break
// toward the lexicographically smaller subset. Throws validation_error when
// C(N, K) exceeds the cap, quoting the count.
OracleResult exhaustive_subsets(const ProblemInstance &inst, std::size_t k, const ScaConfig &cfg,
                                const ExhaustiveOptions &opts = {});

} // namespace spmpcast
