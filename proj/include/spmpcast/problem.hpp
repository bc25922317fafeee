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

#include "spmpcast/common.hpp"
#include "spmpcast/embedding.hpp"

namespace spmpcast {

// One multicast scenario: M user channels, noise variances, and the total
// power budget, together with the real-embedded per-user quadratic forms
// Qbar_m = embed(h_m h_m^H / sigma_m^2). The sign-flipped forms
// Qtilde_m = -Qbar_m are kept implicit (quad_tilde negates quad_bar).
struct ProblemInstance {
    std::size_t n_antennas = 0; // N
    std::size_t n_users = 0;    // M
    double power = 0.0;         // P, linear watts
    RealVec noise_vars;         // sigma_m^2
    std::vector<CVec> channels; // h_m, each length N
    std::vector<Mat> q_bar;     // 2N x 2N, PSD

    // Validates and derives q_bar. Throws validation_error on bad input.
    static ProblemInstance build(std::vector<CVec> channels, RealVec noise_vars, double power);

    std::size_t dim() const { return 2 * n_antennas; }

    // wbar^T Qbar_m wbar (the m-th user's SNR at beamformer wbar).
    double quad_bar(std::size_t m, const RealVec &wbar) const;
    double quad_tilde(std::size_t m, const RealVec &wbar) const { return -quad_bar(m, wbar); }

    // Instance restricted to the given antenna rows (ascending indices).
    ProblemInstance reduced(const std::vector<std::size_t> &antennas) const;
};

// ||wbar||_2^2 <= P (1 + slack)
bool is_feasible(const RealVec &wbar, double power, double slack = 1e-9);

// min_m wbar^T Qbar_m wbar; nonnegative.
double min_snr(const ProblemInstance &inst, const Beamformer &wbar);

// Per-antenna pair norms ||(wbar[j], wbar[j+N])||_2, j = 0..N-1.
RealVec pair_norms(const RealVec &wbar);

// Mixed l12 norm: sum of pair norms. Throws on odd length.
double group_l12_norm(const RealVec &wbar);

// max_m wbar^T Qtilde_m wbar + lambda * ||wbar||_{1,2}.
// The quantity the SCA outer loop monotonically decreases.
double regularized_objective(const ProblemInstance &inst, const Beamformer &wbar, double lambda);

// Indices whose pair norm exceeds tau_rel * (largest pair norm).
// Empty for wbar = 0. Requires 0 < tau_rel < 1.
std::vector<std::size_t> group_support(const RealVec &wbar, double tau_rel);

} // namespace spmpcast
