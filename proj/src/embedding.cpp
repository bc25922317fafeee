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

#include "spmpcast/embedding.hpp"

#include <cmath>

namespace spmpcast {

bool is_hermitian(const ComplexMatrix &q, double tol) {
    if (q.rows != q.cols)
        return false;
    for (std::size_t i = 0; i < q.rows; ++i)
        for (std::size_t j = i; j < q.cols; ++j)
            if (std::abs(q(i, j) - std::conj(q(j, i))) > tol)
                return false;
    return true;
}

ComplexMatrix hermitian_outer(const CVec &h, double scale) {
    const std::size_t n = h.size();
    ComplexMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            q(i, j) = scale * h[i] * std::conj(h[j]);
    return q;
}

Mat embed_quadratic(const ComplexMatrix &q, double tol) {
    if (q.rows != q.cols)
        throw validation_error("embed_quadratic: matrix is not square");
    if (!is_hermitian(q, tol))
        throw validation_error("embed_quadratic: matrix is not Hermitian within tolerance");
    const std::size_t n = q.rows;
    Mat out(2 * n, 2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double re = q(i, j).real();
            const double im = q(i, j).imag();
            out(i, j) = re;
            out(i, j + n) = -im;
            out(i + n, j) = im;
            out(i + n, j + n) = re;
        }
    }
    return out;
}

RealVec embed_vector(const CVec &w) {
    const std::size_t n = w.size();
    RealVec out(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = w[i].real();
        out[i + n] = w[i].imag();
    }
    return out;
}

CVec extract_complex(const RealVec &wbar) {
    if (wbar.size() % 2 != 0)
        throw validation_error("extract_complex: vector length must be even");
    const std::size_t n = wbar.size() / 2;
    CVec out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = cplx(wbar[i], wbar[i + n]);
    return out;
}

} // namespace spmpcast
