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

#include "spmpcast/problem.hpp"
#include "spmpcast/rng.hpp"

namespace spmpcast {

// Multipath downlink channel model over a half-wavelength uniform linear
// array. Per user: L ~ U{paths_min..paths_max} scattering paths, each with
// gain alpha ~ CN(0,1) and azimuth theta ~ U[-pi/2, pi/2].
//
// Reproducibility contract: the stream for (seed, trial, user) is
// SplitMix64(derive(derive(seed, trial), user)), and the draw order is
// L first, then per path alpha (one Box-Muller pair) followed by theta.
struct ChannelModelConfig {
    std::size_t n_antennas = 30;
    std::size_t n_users = 50;
    std::size_t paths_min = 4;
    std::size_t paths_max = 10;
    double noise_var = 1.0;
    std::uint64_t seed = 0;
};

void validate(const ChannelModelConfig &cfg);

// ULA response [1, e^{i pi sin theta}, ..., e^{i pi (N-1) sin theta}];
// antenna spacing d = lambda_c/2, so kd = pi. Unit-modulus entries.
CVec steering_vector(double theta, std::size_t n_antennas);

// h = sqrt(N/L) * sum_l conj(alpha_l) a(theta_l), i.e. the stored vector
// whose conjugate transpose matches the generative model. Exposed so tests
// can force degenerate path configurations.
CVec channel_from_paths(std::size_t n_antennas, const CVec &alphas, const RealVec &thetas);

CVec draw_channel(const ChannelModelConfig &cfg, std::size_t trial, std::size_t user);

// M independent user channels for the given trial index.
ProblemInstance draw_instance(const ChannelModelConfig &cfg, std::size_t trial, double power);

} // namespace spmpcast
