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

#include "spmpcast/select.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

#include "spmpcast/rng.hpp"

namespace spmpcast {

namespace {
constexpr std::uint64_t kResolveSalt = 0x52455355ULL; // restart-seed stream tag
constexpr std::uint64_t kProbeSalt = 0x50524F42ULL;   // probe-retry stream tag
}

Beamformer random_feasible(std::size_t n_antennas, double power, std::uint64_t seed) {
    if (n_antennas == 0)
        throw validation_error("random_feasible: need at least one antenna");
    if (!(power > 0.0))
        throw validation_error("random_feasible: power must be positive");
    SplitMix64 rng(seed);
    CVec h(n_antennas);
    for (auto &v : h)
        v = rng.cnormal();
    Beamformer w = embed_vector(h);
    const double nrm = norm2(w);
    if (nrm == 0.0) {
        w[0] = std::sqrt(power); // unreachable for Box-Muller draws
    } else {
        const double c = std::sqrt(power) / nrm;
        for (auto &v : w)
            v *= c;
    }
    return w;
}

std::uint64_t resolve_restart_seed(std::uint64_t base, std::size_t restart) {
    return derive_stream(base ^ kResolveSalt, restart);
}

ScaResult sca_solve(const ProblemInstance &inst, double lambda, const ScaConfig &cfg,
                    std::uint64_t seed, std::optional<Beamformer> init) {
    if (cfg.sca_iters < 1 || cfg.mp_iters < 1)
        throw validation_error("sca_solve: iteration counts must be at least 1");
    Beamformer w;
    if (init) {
        if (!is_feasible(*init, inst.power))
            throw validation_error("sca_solve: initial point violates the power budget");
        if (init->size() != inst.dim())
            throw validation_error("sca_solve: initial point dimension mismatch");
        w = std::move(*init);
    } else {
        w = random_feasible(inst.n_antennas, inst.power, seed);
    }

    SpmpOptions opts;
    opts.max_iters = cfg.mp_iters;
    opts.gap_tol = cfg.gap_tol;
    opts.gap_check_every = cfg.gap_check_every;
    opts.step_safety = cfg.step_safety;

    ScaResult out;
    double obj = regularized_objective(inst, w, lambda);
    out.objective_trace.push_back(obj);

    for (std::size_t n = 0; n < cfg.sca_iters; ++n) {
        SurrogateModel model = linearize(inst, w, lambda, n);
        auto [cand, report] = solve_subproblem(model, SaddleState::initial(w, inst.n_users), opts);
        out.reports.push_back(std::move(report));
        const double obj_cand = regularized_objective(inst, cand, lambda);
        if (obj_cand < obj) {
            w = std::move(cand);
            obj = obj_cand;
            out.objective_trace.push_back(obj);
        } else {
            break; // surrogate no longer improves the true objective
        }
    }
    out.w = std::move(w);
    return out;
}

std::size_t count_active(const RealVec &wbar, double tau_rel) {
    return group_support(wbar, tau_rel).size();
}

namespace {

// K largest groups by pair norm; equal norms break toward the lower index.
std::vector<std::size_t> top_k_groups(const RealVec &wbar, std::size_t k) {
    RealVec norms = pair_norms(wbar);
    std::vector<std::size_t> idx(norms.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        if (norms[a] != norms[b])
            return norms[a] > norms[b];
        return a < b;
    });
    idx.resize(k);
    std::sort(idx.begin(), idx.end());
    return idx;
}

} // namespace

BisectionOutcome bisect_lambda(const ProblemInstance &inst, std::size_t k, const ScaConfig &sca,
                               const BisectionConfig &bis) {
    if (k < 1 || k > inst.n_antennas)
        throw validation_error("bisect_lambda: K must lie in [1, N]");
    if (!(bis.lambda_lb >= 0.0) || !(bis.lambda_lb < bis.lambda_ub))
        throw validation_error("bisect_lambda: need 0 <= lambda_lb < lambda_ub");
    if (bis.max_depth < 1)
        throw validation_error("bisect_lambda: max_depth must be at least 1");

    struct Probe {
        double lambda;
        std::size_t active;
        Beamformer w;
    };
    std::vector<Probe> probes;
    BisectionOutcome out;

    double lb = bis.lambda_lb;
    double ub = bis.lambda_ub;
    std::optional<Beamformer> carry;

    for (std::size_t depth = 0; depth < bis.max_depth; ++depth) {
        const double lambda = lb + (ub - lb) / 2.0;
        const std::uint64_t probe_seed = sca.seed + depth;
        ScaResult res = sca_solve(inst, lambda, sca, probe_seed, carry);
        out.total_sca_iters += res.reports.size();
        for (const auto &r : res.reports)
            out.total_mp_iters += r.iterations;
        // A final objective stuck at ~0 means SCA never left the origin
        // (or genuinely collapsed); fresh random starts disambiguate.
        if (!carry) {
            for (std::size_t attempt = 1;
                 attempt < std::max<std::size_t>(1, sca.probe_restarts) &&
                 res.objective_trace.back() >= -1e-12;
                 ++attempt) {
                ScaResult retry =
                    sca_solve(inst, lambda, sca, derive_stream(probe_seed ^ kProbeSalt, attempt));
                out.total_sca_iters += retry.reports.size();
                for (const auto &r : retry.reports)
                    out.total_mp_iters += r.iterations;
                if (retry.objective_trace.back() < res.objective_trace.back())
                    res = std::move(retry);
            }
        }
        if (sca.warm_start)
            carry = res.w;
        // A solution driven to (numerically) zero has no active antennas;
        // the relative support threshold would rank roundoff noise there.
        const bool collapsed = norm2_sq(res.w) <= 1e-8 * inst.power;
        const std::size_t active = collapsed ? 0 : count_active(res.w, sca.tau_rel);

        out.trace.push_back({lambda, active, res.objective_trace.back()});
        probes.push_back({lambda, active, std::move(res.w)});

        if (active == k) {
            out.exact = true;
            break;
        }
        if (active > k)
            lb = lambda;
        else
            ub = lambda;
    }

    // Pick the probe: exact hit if any, else smallest S >= K, else largest
    // S; ties break toward larger lambda (the later probe).
    const Probe *chosen = nullptr;
    for (const auto &p : probes) {
        if (out.exact) {
            if (p.active == k)
                chosen = &p;
            continue;
        }
        if (!chosen) {
            chosen = &p;
            continue;
        }
        const bool p_geq = p.active >= k;
        const bool c_geq = chosen->active >= k;
        if (p_geq != c_geq) {
            if (p_geq)
                chosen = &p;
        } else if (p_geq) {
            if (p.active < chosen->active ||
                (p.active == chosen->active && p.lambda >= chosen->lambda))
                chosen = &p;
        } else {
            if (p.active > chosen->active ||
                (p.active == chosen->active && p.lambda >= chosen->lambda))
                chosen = &p;
        }
    }

    out.lambda_star = chosen->lambda;
    out.probe_w = chosen->w;
    out.support = out.exact ? group_support(chosen->w, sca.tau_rel) : top_k_groups(chosen->w, k);
    return out;
}

SelectionResult solve_joint(const ProblemInstance &inst, std::size_t k, const ScaConfig &sca,
                            const BisectionConfig &bis) {
    const auto t_start = std::chrono::steady_clock::now();

    BisectionOutcome outcome = bisect_lambda(inst, k, sca, bis);
    ProblemInstance reduced = inst.reduced(outcome.support);

    SelectionResult result;
    result.selected = outcome.support;
    result.lambda_star = outcome.lambda_star;
    result.exact_k = outcome.exact;
    result.bisection_trace = std::move(outcome.trace);
    result.total_sca_iters = outcome.total_sca_iters;
    result.total_mp_iters = outcome.total_mp_iters;

    // Unregularized re-solve on the reduced array; best of a few restarts.
    const std::size_t restarts = std::max<std::size_t>(1, sca.resolve_restarts);
    Beamformer best_w;
    double best_snr = -1.0;
    for (std::size_t r = 0; r < restarts; ++r) {
        ScaResult res = sca_solve(reduced, 0.0, sca, resolve_restart_seed(sca.seed, r));
        result.total_sca_iters += res.reports.size();
        for (const auto &rep : res.reports)
            result.total_mp_iters += rep.iterations;
        const double snr = min_snr(reduced, res.w);
        if (snr > best_snr) {
            best_snr = snr;
            best_w = std::move(res.w);
        }
    }

    // Pad back to N antennas and evaluate on the original instance.
    CVec w_reduced = extract_complex(best_w);
    result.beamformer.assign(inst.n_antennas, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < result.selected.size(); ++i)
        result.beamformer[result.selected[i]] = w_reduced[i];
    const Beamformer w_full = embed_vector(result.beamformer);
    result.min_snr_linear = min_snr(inst, w_full);
    result.min_snr_db = to_db(result.min_snr_linear);

    result.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start)
            .count();
    return result;
}

} // namespace spmpcast
