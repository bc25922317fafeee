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

#include <cstddef>
#include <string_view>

namespace spmpcast::kernels {

// Dense double-precision primitives behind the solver inner loops.
// Every entry has a scalar reference implementation; AVX2 variants are
// selected at runtime when the CPU supports them. Variants may differ
// from the reference only by floating-point summation order.
struct KernelTable {
    const char *name;

    // <x, y>
    double (*dot)(const double *x, const double *y, std::size_t n);
    // y += a * x
    void (*axpy)(double a, const double *x, double *y, std::size_t n);
    // out = a*x + b*y  (out may alias x or y)
    void (*axpby)(double a, const double *x, double b, const double *y, double *out,
                  std::size_t n);
    // x *= a
    void (*scale)(double a, double *x, std::size_t n);
    // out = A x, A row-major m x n
    void (*matvec)(const double *a, std::size_t m, std::size_t n, const double *x, double *out);
    // out = A^T y, A row-major m x n, out length n
    void (*matvec_t)(const double *a, std::size_t m, std::size_t n, const double *y, double *out);
    // x^T Q x, Q row-major n x n
    double (*quadform)(const double *q, std::size_t n, const double *x);
    // out[j] = ||(w[j], w[j+p])||_2 for j = 0..p-1 (w has length 2p)
    void (*pair_norms)(const double *w, std::size_t p, double *out);
    // sum_j ||(w[j], w[j+p])||_2
    double (*group_l12)(const double *w, std::size_t p);
};

const KernelTable &scalar_table();

// nullptr when the build has no AVX2 variants or the CPU lacks AVX2+FMA.
const KernelTable *avx2_table();

// Active table. First call resolves: SPMPCAST_KERNELS env var
// ("scalar" | "avx2" | "auto") if set, otherwise best supported.
const KernelTable &active();

// Force a table by name; returns false (and leaves the selection alone)
// if the name is unknown or unsupported on this CPU.
bool set_active(std::string_view name);

} // namespace spmpcast::kernels
