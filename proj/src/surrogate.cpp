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

#include "spmpcast/surrogate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "spmpcast/kernels.hpp"

namespace spmpcast {

SurrogateModel linearize(const ProblemInstance &inst, const Beamformer &w_n, double lambda,
                         std::size_t iteration) {
    if (w_n.size() != inst.dim())
        throw validation_error("linearize: expansion point dimension mismatch");
    if (lambda < 0.0)
        throw validation_error("linearize: lambda must be nonnegative");
    if (!is_feasible(w_n, inst.power))
        throw validation_error("linearize: expansion point violates the power budget");

    const auto &k = kernels::active();
    const std::size_t d = inst.dim();

    SurrogateModel model;
    model.iteration = iteration;
    model.n_users = inst.n_users;
    model.dim = d;
    model.lambda = lambda;
    model.power = inst.power;
    model.a = Mat(inst.n_users, d);
    model.b.resize(inst.n_users);

    double max_row_norm = 0.0;
    for (std::size_t m = 0; m < inst.n_users; ++m) {
        double *row = model.a.row(m);
        // a_m = 2 Qtilde_m w_n = -2 Qbar_m w_n
        k.matvec(inst.q_bar[m].data.data(), d, d, w_n.data(), row);
        k.scale(-2.0, row, d);
        // b_m = -w_n^T Qtilde_m w_n = w_n^T Qbar_m w_n >= 0
        model.b[m] = inst.quad_bar(m, w_n);
        max_row_norm = std::max(max_row_norm, std::sqrt(k.dot(row, row, d)));
    }
    model.lipschitz = std::max(max_row_norm, lambda);
    return model;
}

double surrogate_value(const SurrogateModel &model, const RealVec &wbar) {
    if (wbar.size() != model.dim)
        throw validation_error("surrogate_value: dimension mismatch");
    const auto &k = kernels::active();
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t m = 0; m < model.n_users; ++m)
        worst = std::max(worst, k.dot(model.a.row(m), wbar.data(), model.dim) + model.b[m]);
    return worst + model.lambda * k.group_l12(wbar.data(), model.dim / 2);
}

} // namespace spmpcast
