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
#include <utility>

#include "spmpcast/surrogate.hpp"

namespace spmpcast {

// Saddle-point mirror-prox over W x (simplex_M x S):
//   W = { w in R^2N : ||w||_2 <= sqrt(P) }
//   S = { s in R^2N : every pair (s_j, s_{j+N}) has norm <= 1 }
// Euclidean mirror map on W and S, negative entropy on the simplex.

struct SpmpOptions {
    std::size_t max_iters = 1000;
    // Absolute duality-gap tolerance. Negative: use the relative default
    // 1e-5 * (1 + |surrogate value at the initial point|).
    double gap_tol = -1.0;
    // Gap evaluations happen every this many iterations (and at the end).
    std::size_t gap_check_every = 25;
    // alpha = step_safety / (2 L).
    double step_safety = 1.0;
};

// Joint primal/dual point plus the running state the solver needs:
// the last corrected iterate r_t and the sums behind the ergodic averages.
struct SaddleState {
    RealVec w; // z_t, primal block, inside the power ball
    RealVec y; // z_t, simplex block, strictly positive
    RealVec s; // z_t, group-ball block

    RealVec rw, ry, rs;          // corrected iterate r_t
    RealVec sum_w, sum_y, sum_s; // sums of r_1..r_t
    std::size_t t = 0;

    static SaddleState initial(RealVec w0, std::size_t n_users);

    RealVec avg_w() const;
    RealVec avg_y() const;
    RealVec avg_s() const;
};

struct GapSample {
    std::size_t t;
    double gap;
};

struct SolverReport {
    std::size_t iterations = 0;
    double final_gap = 0.0;
    std::vector<GapSample> gap_trace;
    double wall_ms = 0.0;
    bool used_average = false; // ergodic average beat the last iterate
};

// psi(z) = [A^T y + lambda s; -(A w + b); -lambda w]
void vector_field(const SurrogateModel &model, const RealVec &w, const RealVec &y,
                  const RealVec &s, RealVec &g_w, RealVec &g_y, RealVec &g_s);

// Stacked gradient of the mirror map: [w; 1 + log y; s].
// Throws validation_error on nonpositive y entries.
RealVec mirror_grad(const RealVec &w, const RealVec &y, const RealVec &s);

// Inverse map: Euclidean blocks pass through, y block is exp(u - 1).
void mirror_grad_inverse(const RealVec &dual, std::size_t dim, std::size_t n_users, RealVec &w,
                         RealVec &y, RealVec &s);

// Euclidean projection onto the radius ball; identity inside.
void project_ball(RealVec &u, double radius);

// Each pair (s_j, s_{j+N}) projected independently onto the unit 2-ball.
void project_group_ball(RealVec &s);

// KL projection of a positive vector onto the simplex: y / ||y||_1.
// Throws validation_error on nonpositive entries.
void project_simplex_kl(RealVec &y);

// One extragradient round: mirror step along psi(z_t) -> project -> r_{t+1},
// mirror step from z_t along psi(r_{t+1}) -> project -> z_{t+1}; the ergodic
// sums absorb r_{t+1}. Throws std::runtime_error if the exponential mirror
// step overflows (step size too large).
void mp_iteration(const SurrogateModel &model, SaddleState &state, double alpha);

// Primal envelope minus dual envelope, both in closed form:
//   [max_m (a_m^T w + b_m) + lambda ||w||_{1,2}] - [y^T b - sqrt(P) ||A^T y + lambda s||_2]
// Nonnegative for feasible candidates (up to roundoff).
double duality_gap(const SurrogateModel &model, const RealVec &w, const RealVec &y,
                   const RealVec &s);

// Runs mirror-prox with alpha = step_safety/(2L) until the ergodic gap hits
// the tolerance or max_iters is reached; returns the better of the last
// corrected iterate and the ergodic average (by surrogate value, tie ->
// average).
std::pair<Beamformer, SolverReport> solve_subproblem(const SurrogateModel &model,
                                                     SaddleState init, const SpmpOptions &opts);

} // namespace spmpcast
