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

#include <cstdint>
#include <optional>

#include "spmpcast/spmp.hpp"

namespace spmpcast {

struct ScaConfig {
    std::size_t sca_iters = 10;
    std::size_t mp_iters = 1000;
    double gap_tol = -1.0; // negative: solver's relative default
    std::size_t gap_check_every = 25;
    double step_safety = 1.0;
    double tau_rel = 1e-3; // relative group-support threshold
    std::uint64_t seed = 0;
    std::size_t resolve_restarts = 3; // restarts of the final reduced re-solve
    // Retries per bisection probe when SCA stalls at the zero fixed point
    // (a random start whose correlation with every channel soft-thresholds
    // away leaves the linearization unable to move off the origin).
    std::size_t probe_restarts = 3;
    bool warm_start = false; // carry bisection probes' solutions forward
};

struct BisectionConfig {
    double lambda_lb = 0.0;
    double lambda_ub = 2.0;
    std::size_t max_depth = 30;
};

struct BisectionProbe {
    double lambda;
    std::size_t active; // S: active antenna groups at this probe
    double objective;   // final regularized objective of the probe's SCA run
};

struct ScaResult {
    Beamformer w;
    RealVec objective_trace; // initial value plus one entry per accepted step
    std::vector<SolverReport> reports;
};

struct BisectionOutcome {
    double lambda_star = 0.0;
    std::vector<std::size_t> support; // exactly K indices, ascending
    bool exact = false;               // a probe hit S == K
    std::vector<BisectionProbe> trace;
    Beamformer probe_w; // beamformer of the chosen probe
    std::size_t total_sca_iters = 0;
    std::size_t total_mp_iters = 0;
};

struct SelectionResult {
    std::vector<std::size_t> selected; // K antenna indices, ascending
    CVec beamformer;                   // length N, zero off the support
    double min_snr_linear = 0.0;
    double min_snr_db = 0.0;
    double lambda_star = 0.0;
    bool exact_k = false;
    std::vector<BisectionProbe> bisection_trace;
    std::size_t total_sca_iters = 0;
    std::size_t total_mp_iters = 0;
    double wall_ms = 0.0;
};

// Feasible random start: i.i.d. complex Gaussian scaled onto the power
// sphere ||wbar||_2 = sqrt(P).
Beamformer random_feasible(std::size_t n_antennas, double power, std::uint64_t seed);

// Restart seeds shared by solve_joint's reduced re-solve and the exhaustive
// oracle's per-subset solves, so that identical restarts explore identical
// trajectories on the same reduced instance.
std::uint64_t resolve_restart_seed(std::uint64_t base, std::size_t restart);

// SCA outer loop at fixed lambda. Each step linearizes at the current
// point, solves the saddle subproblem, and accepts the candidate only if
// the regularized objective strictly decreases (otherwise keeps the current
// point and stops). `init` must be feasible when given; otherwise a seeded
// random start is drawn.
ScaResult sca_solve(const ProblemInstance &inst, double lambda, const ScaConfig &cfg,
                    std::uint64_t seed, std::optional<Beamformer> init = std::nullopt);

// S = |group_support(w, tau_rel)|
std::size_t count_active(const RealVec &wbar, double tau_rel);

// Binary search on lambda for exactly K active groups. When no probe hits
// S == K within max_depth, falls back to the probe with the smallest
// S >= K (failing that, the largest S), keeping its K largest groups.
BisectionOutcome bisect_lambda(const ProblemInstance &inst, std::size_t k, const ScaConfig &sca,
                               const BisectionConfig &bis);

// Full pipeline: bisection, reduced re-solve at lambda = 0 with restarts,
// zero-padded final beamformer evaluated on the original instance.
SelectionResult solve_joint(const ProblemInstance &inst, std::size_t k, const ScaConfig &sca,
                            const BisectionConfig &bis);

} // namespace spmpcast
