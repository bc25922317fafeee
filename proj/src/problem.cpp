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

#include "spmpcast/problem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spmpcast/kernels.hpp"

namespace spmpcast {

ProblemInstance ProblemInstance::build(std::vector<CVec> channels, RealVec noise_vars,
                                       double power) {
    if (channels.empty())
        throw validation_error("ProblemInstance: at least one user channel required");
    if (noise_vars.size() != channels.size())
        throw validation_error("ProblemInstance: noise variance count must equal user count");
    if (!(power > 0.0))
        throw validation_error("ProblemInstance: power budget must be positive");
    const std::size_t n = channels.front().size();
    if (n == 0)
        throw validation_error("ProblemInstance: channels must be non-empty");
    for (const auto &h : channels)
        if (h.size() != n)
            throw validation_error("ProblemInstance: all channels must have equal length");
    for (double v : noise_vars)
        if (!(v > 0.0))
            throw validation_error("ProblemInstance: noise variances must be positive");

    ProblemInstance inst;
    inst.n_antennas = n;
    inst.n_users = channels.size();
    inst.power = power;
    inst.noise_vars = std::move(noise_vars);
    inst.channels = std::move(channels);
    inst.q_bar.reserve(inst.n_users);
    for (std::size_t m = 0; m < inst.n_users; ++m)
        inst.q_bar.push_back(
            embed_quadratic(hermitian_outer(inst.channels[m], 1.0 / inst.noise_vars[m])));
    return inst;
}

double ProblemInstance::quad_bar(std::size_t m, const RealVec &wbar) const {
    if (wbar.size() != dim())
        throw validation_error("quad_bar: beamformer dimension mismatch");
    return kernels::active().quadform(q_bar[m].data.data(), dim(), wbar.data());
}

ProblemInstance ProblemInstance::reduced(const std::vector<std::size_t> &antennas) const {
    if (antennas.empty())
        throw validation_error("reduced: antenna subset must be non-empty");
    for (std::size_t a : antennas)
        if (a >= n_antennas)
            throw validation_error("reduced: antenna index out of range");
    std::vector<CVec> sub(n_users);
    for (std::size_t m = 0; m < n_users; ++m) {
        sub[m].reserve(antennas.size());
        for (std::size_t a : antennas)
            sub[m].push_back(channels[m][a]);
    }
    return build(std::move(sub), noise_vars, power);
}

bool is_feasible(const RealVec &wbar, double power, double slack) {
    return norm2_sq(wbar) <= power * (1.0 + slack);
}

double min_snr(const ProblemInstance &inst, const Beamformer &wbar) {
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t m = 0; m < inst.n_users; ++m)
        best = std::min(best, inst.quad_bar(m, wbar));
    return best;
}

RealVec pair_norms(const RealVec &wbar) {
    if (wbar.size() % 2 != 0)
        throw validation_error("pair_norms: vector length must be even");
    const std::size_t p = wbar.size() / 2;
    RealVec out(p);
    kernels::active().pair_norms(wbar.data(), p, out.data());
    return out;
}

double group_l12_norm(const RealVec &wbar) {
    if (wbar.size() % 2 != 0)
        throw validation_error("group_l12_norm: vector length must be even");
    return kernels::active().group_l12(wbar.data(), wbar.size() / 2);
}

double regularized_objective(const ProblemInstance &inst, const Beamformer &wbar, double lambda) {
    if (lambda < 0.0)
        throw validation_error("regularized_objective: lambda must be nonnegative");
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t m = 0; m < inst.n_users; ++m)
        worst = std::max(worst, inst.quad_tilde(m, wbar));
    return worst + lambda * group_l12_norm(wbar);
}

std::vector<std::size_t> group_support(const RealVec &wbar, double tau_rel) {
    if (!(tau_rel > 0.0 && tau_rel < 1.0))
        throw validation_error("group_support: tau_rel must lie in (0, 1)");
    RealVec norms = pair_norms(wbar);
    const double peak = norms.empty() ? 0.0 : *std::max_element(norms.begin(), norms.end());
    std::vector<std::size_t> support;
    if (peak == 0.0)
        return support;
    const double thresh = tau_rel * peak;
    for (std::size_t j = 0; j < norms.size(); ++j)
        if (norms[j] > thresh)
            support.push_back(j);
    return support;
}

} // namespace spmpcast
