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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>

#include "spmpcast/embedding.hpp"
#include "spmpcast/kernels.hpp"
#include "spmpcast/rng.hpp"

using namespace spmpcast;

namespace {

// Random Hermitian matrix with entries of unit scale.
ComplexMatrix random_hermitian(std::size_t n, SplitMix64 &rng) {
    ComplexMatrix q(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        q(i, i) = cplx(rng.uniform(-1.0, 1.0), 0.0);
        for (std::size_t j = i + 1; j < n; ++j) {
            q(i, j) = rng.cnormal();
            q(j, i) = std::conj(q(i, j));
        }
    }
    return q;
}

cplx quad_complex(const ComplexMatrix &q, const CVec &w) {
    cplx acc(0.0, 0.0);
    for (std::size_t i = 0; i < q.rows; ++i) {
        cplx row(0.0, 0.0);
        for (std::size_t j = 0; j < q.cols; ++j)
            row += q(i, j) * w[j];
        acc += std::conj(w[i]) * row;
    }
    return acc;
}

} // namespace

TEST_CASE("embed_quadratic: forced block structure") {
    // 1x1 real scalar embeds as a scaled identity
    ComplexMatrix s(1, 1);
    s(0, 0) = cplx(2.0, 0.0);
    Mat e = embed_quadratic(s);
    CHECK(e.rows == 2);
    CHECK(e(0, 0) == 2.0);
    CHECK(e(0, 1) == 0.0);
    CHECK(e(1, 0) == 0.0);
    CHECK(e(1, 1) == 2.0);

    // 2x2 with an imaginary off-diagonal
    ComplexMatrix q(2, 2);
    q(0, 0) = cplx(2.0, 0.0);
    q(0, 1) = cplx(0.0, 1.0);
    q(1, 0) = cplx(0.0, -1.0);
    q(1, 1) = cplx(2.0, 0.0);
    Mat m = embed_quadratic(q);
    const double expect[4][4] = {
        {2, 0, 0, -1},
        {0, 2, 1, 0},
        {0, 1, 2, 0},
        {-1, 0, 0, 2},
    };
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j)
            CHECK(m(i, j) == expect[i][j]);

    // zero matrix embeds to zero
    ComplexMatrix z(3, 3);
    Mat mz = embed_quadratic(z);
    for (double v : mz.data)
        CHECK(v == 0.0);
}

TEST_CASE("embed_quadratic: rejects bad input") {
    ComplexMatrix rect(2, 3);
    CHECK_THROWS_AS(embed_quadratic(rect), validation_error);

    ComplexMatrix nh(2, 2);
    nh(0, 1) = cplx(1.0, 0.0);
    nh(1, 0) = cplx(0.5, 0.0); // not the conjugate
    CHECK_THROWS_AS(embed_quadratic(nh), validation_error);
}

TEST_CASE("embed_vector / extract_complex") {
    CHECK(embed_vector({cplx(1, 2)}) == RealVec{1, 2});
    CHECK(embed_vector({cplx(3, 0), cplx(0, -1)}) == RealVec{3, 0, 0, -1});
    CHECK(embed_vector(CVec(4, cplx(0, 0))) == RealVec(8, 0.0));

    CHECK(extract_complex({1, 2}) == CVec{cplx(1, 2)});
    CHECK(extract_complex({3, 0, 0, -1}) == (CVec{cplx(3, 0), cplx(0, -1)}));
    CHECK(extract_complex({0, 0}) == CVec{cplx(0, 0)});
    CHECK_THROWS_AS(extract_complex({1, 2, 3}), validation_error);
}

TEST_CASE("round trip extract(embed(w)) is bit-exact") {
    SplitMix64 rng(42);
    for (int rep = 0; rep < 200; ++rep) {
        const std::size_t n = 1 + rng.uniform_int(12);
        CVec w(n);
        for (auto &v : w)
            v = rng.cnormal();
        CVec back = extract_complex(embed_vector(w));
        REQUIRE(back.size() == n);
        for (std::size_t i = 0; i < n; ++i) {
            CHECK(back[i].real() == w[i].real());
            CHECK(back[i].imag() == w[i].imag());
        }
    }
}

TEST_CASE("quadratic-form equivalence over random draws") {
    SplitMix64 rng(7);
    for (std::size_t n : {1, 4, 16}) {
        for (int rep = 0; rep < 400; ++rep) {
            ComplexMatrix q = random_hermitian(n, rng);
            CVec w(n);
            for (auto &v : w)
                v = rng.cnormal();
            const cplx truth = quad_complex(q, w);
            CHECK(std::abs(truth.imag()) <= 1e-10 * (1.0 + std::abs(truth))); // Hermitian form
            Mat e = embed_quadratic(q);
            RealVec wb = embed_vector(w);
            const double emb = kernels::active().quadform(e.data.data(), 2 * n, wb.data());
            CHECK(std::abs(truth.real() - emb) <= 1e-10 * (1.0 + std::abs(truth.real())));
        }
    }
}

TEST_CASE("embedding of a PSD form stays PSD (random Rayleigh quotients)") {
    SplitMix64 rng(11);
    for (int rep = 0; rep < 100; ++rep) {
        const std::size_t n = 1 + rng.uniform_int(8);
        CVec h(n);
        for (auto &v : h)
            v = rng.cnormal();
        Mat e = embed_quadratic(hermitian_outer(h, 1.0));
        for (int probe = 0; probe < 10; ++probe) {
            RealVec x(2 * n);
            for (auto &v : x)
                v = rng.uniform(-1.0, 1.0);
            CHECK(kernels::active().quadform(e.data.data(), 2 * n, x.data()) >= -1e-10);
        }
    }
}
