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

#include "spmpcast/problem.hpp"

namespace spmpcast {

// Convex majorant of the regularized objective at one SCA expansion point:
// rows a_m = 2 Qtilde_m w_n, offsets b_m = -w_n^T Qtilde_m w_n >= 0, so
// max_m (a_m^T w + b_m) + lambda ||w||_{1,2} upper-bounds the objective and
// is tight at w_n. The stacked operator [A; lambda I] of the bilinear
// saddle form is kept implicit: apply A and the lambda-scaled identity
// separately.
struct SurrogateModel {
    std::size_t iteration = 0; // SCA iteration index of the expansion point
    std::size_t n_users = 0;   // M
    std::size_t dim = 0;       // 2N
    Mat a;                     // M x 2N
    RealVec b;                 // length M
    double lambda = 0.0;
    double lipschitz = 0.0; // L = max(max_m ||a_m||_2, lambda)
    double power = 0.0;     // ball radius^2 carried from the instance
};

// Throws validation_error if w_n is infeasible for the instance's budget.
SurrogateModel linearize(const ProblemInstance &inst, const Beamformer &w_n, double lambda,
                         std::size_t iteration = 0);

// max_m (a_m^T w + b_m) + lambda ||w||_{1,2}
double surrogate_value(const SurrogateModel &model, const RealVec &wbar);

} // namespace spmpcast
