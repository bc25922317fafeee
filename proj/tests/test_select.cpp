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

#include "spmpcast/select.hpp"

#include "test_util.hpp"

using namespace spmpcast;

namespace {

ScaConfig quick_cfg(std::uint64_t seed) {
    ScaConfig cfg;
    cfg.sca_iters = 10;
    cfg.mp_iters = 600;
    cfg.seed = seed;
    return cfg;
}

} // namespace

TEST_CASE("random_feasible lands exactly on the power sphere") {
    for (std::uint64_t seed : {1u, 2u, 3u}) {
        Beamformer w = random_feasible(6, 10.0, seed);
        REQUIRE(w.size() == 12);
        CHECK(norm2_sq(w) == doctest::Approx(10.0).epsilon(1e-12));
    }
    CHECK(random_feasible(4, 2.0, 7) == random_feasible(4, 2.0, 7));
    CHECK_THROWS_AS(random_feasible(0, 1.0, 1), validation_error);
    CHECK_THROWS_AS(random_feasible(3, 0.0, 1), validation_error);
}

TEST_CASE("sca_solve: objective trace is strictly decreasing") {
    for (std::uint64_t seed = 0; seed < 8; ++seed) {
        auto inst = testutil::random_instance(6, 4, 10.0, 500 + seed);
        for (double lambda : {0.0, 0.5}) {
            ScaResult res = sca_solve(inst, lambda, quick_cfg(seed), seed);
            REQUIRE(!res.objective_trace.empty());
            for (std::size_t i = 1; i < res.objective_trace.size(); ++i)
                CHECK(res.objective_trace[i] < res.objective_trace[i - 1]);
            CHECK(is_feasible(res.w, inst.power));
        }
    }
}

TEST_CASE("sca_solve: single user at lambda = 0 reaches the matched filter value") {
    SplitMix64 rng(600);
    for (int rep = 0; rep < 10; ++rep) {
        CVec h(5);
        for (auto &v : h)
            v = rng.cnormal();
        auto inst = ProblemInstance::build({h}, {1.0}, 10.0);
        double h2 = 0.0;
        for (const auto &v : h)
            h2 += std::norm(v);

        ScaResult res = sca_solve(inst, 0.0, quick_cfg(rep), 900 + rep);
        const double achieved = min_snr(inst, res.w);
        CHECK(achieved >= 0.99 * 10.0 * h2); // within 1% of P ||h||^2 / sigma^2
        CHECK(achieved <= 10.0 * h2 * (1.0 + 1e-9));
    }
}

TEST_CASE("sca_solve: huge lambda collapses the solution toward zero") {
    auto inst = testutil::random_instance(4, 3, 10.0, 610);
    // lambda far above the gradient scale 2 ||Qtilde w|| sqrt(P)
    double scale = 0.0;
    for (std::size_t m = 0; m < inst.n_users; ++m) {
        RealVec w1(inst.dim(), 0.0);
        for (std::size_t j = 0; j < inst.dim(); ++j)
            w1[j] = inst.q_bar[m](j, j);
        scale = std::max(scale, norm2(w1));
    }
    const double lambda = 10.0 * 2.0 * scale * std::sqrt(10.0) + 100.0;
    ScaResult res = sca_solve(inst, lambda, quick_cfg(0), 611);
    // regularized objective is >= 0 for such lambda; SCA should approach it
    CHECK(res.objective_trace.back() >= -1e-9);
    CHECK(res.objective_trace.back() < res.objective_trace.front());
    CHECK(norm2(res.w) < std::sqrt(10.0) * 0.5);
}

TEST_CASE("sca_solve: sca_iters = 1 runs exactly one surrogate minimization") {
    auto inst = testutil::random_instance(4, 3, 10.0, 620);
    ScaConfig cfg = quick_cfg(0);
    cfg.sca_iters = 1;
    ScaResult res = sca_solve(inst, 0.2, cfg, 621);
    CHECK(res.reports.size() == 1);
    CHECK(res.objective_trace.size() <= 2);
}

TEST_CASE("sca_solve: infeasible init rejected") {
    auto inst = testutil::random_instance(4, 3, 1.0, 630);
    CHECK_THROWS_AS(sca_solve(inst, 0.0, quick_cfg(0), 0, RealVec(8, 1.0)), validation_error);
}

TEST_CASE("count_active matches the support size") {
    CHECK(count_active({1, 0, 0.5, 0}, 1e-3) == 1);
    CHECK(count_active(RealVec(8, 0.0), 1e-3) == 0);
    CHECK(count_active({1, 1, 1, 1}, 1e-3) == 2);
}

TEST_CASE("bisect_lambda: K = N terminates with every antenna active") {
    auto inst = testutil::unit_scale_instance(4, 3, 700);
    BisectionConfig bis;
    auto out = bisect_lambda(inst, 4, quick_cfg(3), bis);
    CHECK(out.support.size() == 4);
    CHECK(out.trace.size() <= bis.max_depth);
    for (std::size_t i = 0; i < 4; ++i)
        CHECK(out.support[i] == i);
}

TEST_CASE("bisect_lambda: single user K = 1 picks the strongest antenna") {
    int exact_hits = 0;
    for (int rep = 0; rep < 10; ++rep) {
        CVec h = testutil::profile_channel(4, 710 + rep);
        auto inst = ProblemInstance::build({h}, {1.0}, 1.0);
        std::size_t best = 0;
        for (std::size_t i = 1; i < 4; ++i)
            if (std::abs(h[i]) > std::abs(h[best]))
                best = i;

        ScaConfig cfg = quick_cfg(rep);
        cfg.mp_iters = 1000;
        auto out = bisect_lambda(inst, 1, cfg, BisectionConfig{});
        REQUIRE(out.support.size() == 1);
        CHECK(out.support[0] == best);
        exact_hits += out.exact ? 1 : 0;
    }
    CHECK(exact_hits >= 8); // lambda in [0,2] brackets the K=1 window here
}

TEST_CASE("bisect_lambda: K out of range") {
    auto inst = testutil::unit_scale_instance(4, 2, 720);
    CHECK_THROWS_AS(bisect_lambda(inst, 0, quick_cfg(0), BisectionConfig{}), validation_error);
    CHECK_THROWS_AS(bisect_lambda(inst, 5, quick_cfg(0), BisectionConfig{}), validation_error);
}

TEST_CASE("solve_joint: frozen single-user example, N=4, K=2") {
    // h = [2, 1, 1, 0]: top-2 subset {0, 1} (index tie-break), SNR = P * 5 = 50.
    CVec h = {cplx(2, 0), cplx(1, 0), cplx(1, 0), cplx(0, 0)};
    auto inst = ProblemInstance::build({h}, {1.0}, 10.0);
    SelectionResult res = solve_joint(inst, 2, quick_cfg(5), BisectionConfig{});

    CHECK(res.selected == std::vector<std::size_t>{0, 1});
    CHECK(res.min_snr_linear == doctest::Approx(50.0).epsilon(0.01));
    CHECK(res.min_snr_db == doctest::Approx(16.9897).epsilon(0.01));
    CHECK(res.beamformer[2] == cplx(0.0, 0.0));
    CHECK(res.beamformer[3] == cplx(0.0, 0.0));
    CHECK(norm2_sq(embed_vector(res.beamformer)) <= 10.0 * (1.0 + 1e-9));
}

TEST_CASE("solve_joint: K = N matches a plain unregularized solve") {
    auto inst = testutil::unit_scale_instance(4, 3, 730);
    SelectionResult res = solve_joint(inst, 4, quick_cfg(9), BisectionConfig{});
    CHECK(res.selected.size() == 4);

    // direct multi-restart solve on the full array
    double direct = 0.0;
    for (std::size_t r = 0; r < 3; ++r) {
        ScaResult sr = sca_solve(inst, 0.0, quick_cfg(9), resolve_restart_seed(9, r));
        direct = std::max(direct, min_snr(inst, sr.w));
    }
    CHECK(res.min_snr_linear == doctest::Approx(direct).epsilon(1e-9));
}

TEST_CASE("solve_joint is deterministic") {
    auto inst = testutil::unit_scale_instance(5, 3, 740);
    SelectionResult a = solve_joint(inst, 2, quick_cfg(11), BisectionConfig{});
    SelectionResult b = solve_joint(inst, 2, quick_cfg(11), BisectionConfig{});
    CHECK(a.selected == b.selected);
    CHECK(a.min_snr_linear == b.min_snr_linear); // bit-identical
    CHECK(a.lambda_star == b.lambda_star);
    CHECK(a.exact_k == b.exact_k);
    REQUIRE(a.bisection_trace.size() == b.bisection_trace.size());
    for (std::size_t i = 0; i < a.bisection_trace.size(); ++i) {
        CHECK(a.bisection_trace[i].lambda == b.bisection_trace[i].lambda);
        CHECK(a.bisection_trace[i].active == b.bisection_trace[i].active);
        CHECK(a.bisection_trace[i].objective == b.bisection_trace[i].objective);
    }
    for (std::size_t i = 0; i < a.beamformer.size(); ++i)
        CHECK(a.beamformer[i] == b.beamformer[i]);
}

TEST_CASE("solve_joint: power feasible at every stage") {
    auto inst = testutil::unit_scale_instance(6, 4, 750);
    for (std::size_t k : {1u, 3u, 6u}) {
        SelectionResult res = solve_joint(inst, k, quick_cfg(13), BisectionConfig{});
        CHECK(res.selected.size() == k);
        CHECK(norm2_sq(embed_vector(res.beamformer)) <= inst.power * (1.0 + 1e-9));
        for (std::size_t i = 0; i < res.beamformer.size(); ++i) {
            const bool on = std::find(res.selected.begin(), res.selected.end(), i) !=
                            res.selected.end();
            if (!on)
                CHECK(res.beamformer[i] == cplx(0.0, 0.0));
        }
    }
}

TEST_CASE("bisection trace: larger lambda rarely yields more active groups") {
    // statistical check on the traces gathered from a few joint solves
    std::size_t agree = 0, total = 0;
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        auto inst = testutil::unit_scale_instance(6, 4, 760 + seed);
        SelectionResult res = solve_joint(inst, 3, quick_cfg(seed), BisectionConfig{});
        auto trace = res.bisection_trace;
        std::sort(trace.begin(), trace.end(),
                  [](const BisectionProbe &a, const BisectionProbe &b) {
                      return a.lambda < b.lambda;
                  });
        for (std::size_t i = 1; i < trace.size(); ++i) {
            total += 1;
            agree += trace[i].active <= trace[i - 1].active ? 1 : 0;
        }
    }
    REQUIRE(total > 0);
    CHECK(static_cast<double>(agree) >= 0.9 * static_cast<double>(total));
}
