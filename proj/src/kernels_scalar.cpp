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
// Scalar reference kernels. These define the semantics the SIMD variants
// are tested against.

#include "spmpcast/kernels.hpp"

#include <cmath>

namespace spmpcast::kernels {

namespace {

double dot_scalar(const double *x, const double *y, std::size_t n) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += x[i] * y[i];
    return acc;
}

void axpy_scalar(double a, const double *x, double *y, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        y[i] += a * x[i];
}

void axpby_scalar(double a, const double *x, double b, const double *y, double *out,
                  std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a * x[i] + b * y[i];
}

void scale_scalar(double a, double *x, std::size_t n) {
    for (std::size_t i = 0; i < n; ++i)
        x[i] *= a;
}

void matvec_scalar(const double *a, std::size_t m, std::size_t n, const double *x, double *out) {
    for (std::size_t i = 0; i < m; ++i)
        out[i] = dot_scalar(a + i * n, x, n);
}

void matvec_t_scalar(const double *a, std::size_t m, std::size_t n, const double *y, double *out) {
    for (std::size_t j = 0; j < n; ++j)
        out[j] = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        axpy_scalar(y[i], a + i * n, out, n);
}

double quadform_scalar(const double *q, std::size_t n, const double *x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += x[i] * dot_scalar(q + i * n, x, n);
    return acc;
}

void pair_norms_scalar(const double *w, std::size_t p, double *out) {
    for (std::size_t j = 0; j < p; ++j)
        out[j] = std::sqrt(w[j] * w[j] + w[j + p] * w[j + p]);
}

double group_l12_scalar(const double *w, std::size_t p) {
    double acc = 0.0;
    for (std::size_t j = 0; j < p; ++j)
        acc += std::sqrt(w[j] * w[j] + w[j + p] * w[j + p]);
    return acc;
}

} // namespace

const KernelTable &scalar_table() {
    static const KernelTable table = {
        "scalar",        dot_scalar,      axpy_scalar,       axpby_scalar,     scale_scalar,
        matvec_scalar,   matvec_t_scalar, quadform_scalar,   pair_norms_scalar,
        group_l12_scalar,
    };
    return table;
}

} // namespace spmpcast::kernels
