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

#include "spmpcast/channelgen.hpp"

#include <cmath>

namespace spmpcast {

void validate(const ChannelModelConfig &cfg) {
    if (cfg.n_antennas < 1 || cfg.n_users < 1)
        throw validation_error("ChannelModelConfig: need at least one antenna and one user");
    if (cfg.paths_min < 1 || cfg.paths_min > cfg.paths_max)
        throw validation_error("ChannelModelConfig: path-count range is empty");
    if (!(cfg.noise_var > 0.0))
        throw validation_error("ChannelModelConfig: noise variance must be positive");
}

CVec steering_vector(double theta, std::size_t n_antennas) {
    CVec a(n_antennas);
    const double phase_step = M_PI * std::sin(theta); // kd = pi at d = lambda/2
    for (std::size_t k = 0; k < n_antennas; ++k)
        a[k] = std::polar(1.0, phase_step * static_cast<double>(k));
    return a;
}

CVec channel_from_paths(std::size_t n_antennas, const CVec &alphas, const RealVec &thetas) {
    if (alphas.empty() || alphas.size() != thetas.size())
        throw validation_error("channel_from_paths: need matching, non-empty path arrays");
    const double scale =
        std::sqrt(static_cast<double>(n_antennas) / static_cast<double>(alphas.size()));
    CVec h(n_antennas, cplx(0.0, 0.0));
    for (std::size_t l = 0; l < alphas.size(); ++l) {
        const CVec a = steering_vector(thetas[l], n_antennas);
        const cplx gain = std::conj(alphas[l]);
        for (std::size_t k = 0; k < n_antennas; ++k)
            h[k] += gain * a[k];
    }
    for (auto &v : h)
        v *= scale;
    return h;
}

CVec draw_channel(const ChannelModelConfig &cfg, std::size_t trial, std::size_t user) {
    validate(cfg);
    SplitMix64 rng(derive_stream(derive_stream(cfg.seed, trial), user));
    const std::size_t span = cfg.paths_max - cfg.paths_min + 1;
    const std::size_t paths = cfg.paths_min + static_cast<std::size_t>(rng.uniform_int(span));
    CVec alphas(paths);
    RealVec thetas(paths);
    for (std::size_t l = 0; l < paths; ++l) {
        alphas[l] = rng.cnormal();
        thetas[l] = rng.uniform(-M_PI / 2.0, M_PI / 2.0);
    }
    return channel_from_paths(cfg.n_antennas, alphas, thetas);
}

ProblemInstance draw_instance(const ChannelModelConfig &cfg, std::size_t trial, double power) {
    validate(cfg);
    std::vector<CVec> channels(cfg.n_users);
    for (std::size_t m = 0; m < cfg.n_users; ++m)
        channels[m] = draw_channel(cfg, trial, m);
    return ProblemInstance::build(std::move(channels), RealVec(cfg.n_users, cfg.noise_var),
                                  power);
}

} // namespace spmpcast
