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
// AVX2+FMA kernel variants. This translation unit is compiled with
// -mavx2 -mfma; callers must gate on runtime CPU support (see kernels.cpp).

#include "spmpcast/kernels.hpp"

#if defined(__x86_64__) || defined(_M_X64)
#define SPMPCAST_BUILD_AVX2 1
#else
#define SPMPCAST_BUILD_AVX2 0
#endif

#if SPMPCAST_BUILD_AVX2

#include <immintrin.h>

#include <cmath>

namespace spmpcast::kernels {

namespace {

inline double hsum(__m256d v) {
    __m128d lo = _mm256_castpd256_pd128(v);
    __m128d hi = _mm256_extractf128_pd(v, 1);
    lo = _mm_add_pd(lo, hi);
    __m128d swapped = _mm_unpackhi_pd(lo, lo);
    return _mm_cvtsd_f64(_mm_add_sd(lo, swapped));
}

double dot_avx2(const double *x, const double *y, std::size_t n) {
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t i = 0;
    for (; i + 8 <= n; i += 8) {
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
        acc1 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i + 4), _mm256_loadu_pd(y + i + 4), acc1);
    }
    for (; i + 4 <= n; i += 4)
        acc0 = _mm256_fmadd_pd(_mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i), acc0);
    double acc = hsum(_mm256_add_pd(acc0, acc1));
    for (; i < n; ++i)
        acc += x[i] * y[i];
    return acc;
}

void axpy_avx2(double a, const double *x, double *y, std::size_t n) {
    __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i), _mm256_loadu_pd(y + i));
        _mm256_storeu_pd(y + i, r);
    }
    for (; i < n; ++i)
        y[i] += a * x[i];
}

void axpby_avx2(double a, const double *x, double b, const double *y, double *out,
                std::size_t n) {
    __m256d av = _mm256_set1_pd(a);
    __m256d bv = _mm256_set1_pd(b);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4) {
        __m256d r = _mm256_fmadd_pd(av, _mm256_loadu_pd(x + i),
                                    _mm256_mul_pd(bv, _mm256_loadu_pd(y + i)));
        _mm256_storeu_pd(out + i, r);
    }
    for (; i < n; ++i)
        out[i] = a * x[i] + b * y[i];
}

void scale_avx2(double a, double *x, std::size_t n) {
    __m256d av = _mm256_set1_pd(a);
    std::size_t i = 0;
    for (; i + 4 <= n; i += 4)
        _mm256_storeu_pd(x + i, _mm256_mul_pd(av, _mm256_loadu_pd(x + i)));
    for (; i < n; ++i)
        x[i] *= a;
}

void matvec_avx2(const double *a, std::size_t m, std::size_t n, const double *x, double *out) {
    for (std::size_t i = 0; i < m; ++i)
        out[i] = dot_avx2(a + i * n, x, n);
}

void matvec_t_avx2(const double *a, std::size_t m, std::size_t n, const double *y, double *out) {
    std::size_t j = 0;
    __m256d zero = _mm256_setzero_pd();
    for (; j + 4 <= n; j += 4)
        _mm256_storeu_pd(out + j, zero);
    for (; j < n; ++j)
        out[j] = 0.0;
    for (std::size_t i = 0; i < m; ++i)
        axpy_avx2(y[i], a + i * n, out, n);
}

double quadform_avx2(const double *q, std::size_t n, const double *x) {
    double acc = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        acc += x[i] * dot_avx2(q + i * n, x, n);
    return acc;
}

void pair_norms_avx2(const double *w, std::size_t p, double *out) {
    std::size_t j = 0;
    for (; j + 4 <= p; j += 4) {
        __m256d re = _mm256_loadu_pd(w + j);
        __m256d im = _mm256_loadu_pd(w + j + p);
        __m256d sq = _mm256_fmadd_pd(re, re, _mm256_mul_pd(im, im));
        _mm256_storeu_pd(out + j, _mm256_sqrt_pd(sq));
    }
    for (; j < p; ++j)
        out[j] = std::sqrt(w[j] * w[j] + w[j + p] * w[j + p]);
}

double group_l12_avx2(const double *w, std::size_t p) {
    __m256d acc = _mm256_setzero_pd();
    std::size_t j = 0;
    for (; j + 4 <= p; j += 4) {
        __m256d re = _mm256_loadu_pd(w + j);
        __m256d im = _mm256_loadu_pd(w + j + p);
        __m256d sq = _mm256_fmadd_pd(re, re, _mm256_mul_pd(im, im));
        acc = _mm256_add_pd(acc, _mm256_sqrt_pd(sq));
    }
    double s = hsum(acc);
    for (; j < p; ++j)
        s += std::sqrt(w[j] * w[j] + w[j + p] * w[j + p]);
    return s;
}

const KernelTable avx2_impl = {
    "avx2",      dot_avx2,      axpy_avx2,     axpby_avx2,      scale_avx2,
    matvec_avx2, matvec_t_avx2, quadform_avx2, pair_norms_avx2, group_l12_avx2,
};

} // namespace

const KernelTable *avx2_table_impl() { return &avx2_impl; }

} // namespace spmpcast::kernels

#else // !SPMPCAST_BUILD_AVX2

namespace spmpcast::kernels {
const KernelTable *avx2_table_impl() { return nullptr; }
} // namespace spmpcast::kernels

#endif
