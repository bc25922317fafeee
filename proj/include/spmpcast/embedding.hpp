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

#include "spmpcast/common.hpp"

namespace spmpcast {

// Dense row-major complex matrix. Only the embeddings the solver pipeline
// needs; this is not a general linear algebra layer.
struct ComplexMatrix {
    std::size_t rows = 0;
    std::size_t cols = 0;
    CVec data;

    ComplexMatrix() = default;
    ComplexMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

    cplx &operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    cplx operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
};

// Entrywise check |q(i,j) - conj(q(j,i))| <= tol. Inputs are constructed,
// not measured, hence the tight default.
bool is_hermitian(const ComplexMatrix &q, double tol = 1e-12);

// h h^H scaled; the Hermitian quadratic-form carrier for one user.
ComplexMatrix hermitian_outer(const CVec &h, double scale);

// 2N x 2N block matrix [[Re q, -Im q], [Im q, Re q]] such that
// w^H q w == wbar^T qbar wbar for the real embedding wbar of w.
// Throws validation_error on non-square or non-Hermitian input.
Mat embed_quadratic(const ComplexMatrix &q, double tol = 1e-12);

// [Re(w); Im(w)], length 2N.
RealVec embed_vector(const CVec &w);

// Inverse of embed_vector; throws validation_error on odd length.
CVec extract_complex(const RealVec &wbar);

} // namespace spmpcast
