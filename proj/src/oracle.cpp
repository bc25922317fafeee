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

#include "spmpcast/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "spmpcast/parallel.hpp"

namespace spmpcast {

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
    if (k > n)
        return 0;
    k = std::min(k, n - k);
    unsigned __int128 acc = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
        if (acc > std::numeric_limits<std::uint64_t>::max())
            throw validation_error("binomial: value exceeds 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

OracleResult single_user_optimum(const CVec &h, double noise_var, double power, std::size_t k) {
    const std::size_t n = h.size();
    if (k < 1 || k > n)
        throw validation_error("single_user_optimum: K must lie in [1, N]");
    if (!(noise_var > 0.0) || !(power > 0.0))
        throw validation_error("single_user_optimum: noise variance and power must be positive");

    std::vector<std::size_t> idx(n);
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        const double ma = std::abs(h[a]);
        const double mb = std::abs(h[b]);
        if (ma != mb)
            return ma > mb;
        return a < b;
    });
    idx.resize(k);
    std::sort(idx.begin(), idx.end());

    double energy = 0.0;
    for (std::size_t i : idx)
        energy += std::norm(h[i]);

    OracleResult out;
    out.subset = std::move(idx);
    out.min_snr_linear = power * energy / noise_var;
    out.min_snr_db = to_db(out.min_snr_linear);
    out.method = "analytic";
    out.beamformer.assign(n, cplx(0.0, 0.0));
    if (energy > 0.0) {
        const double c = std::sqrt(power / energy);
        for (std::size_t i : out.subset)
            out.beamformer[i] = c * h[i];
    }
    return out;
}

namespace {

std::vector<std::vector<std::size_t>> enumerate_subsets(std::size_t n, std::size_t k) {
    std::vector<std::vector<std::size_t>> subsets;
    std::vector<std::size_t> cur(k);
    std::iota(cur.begin(), cur.end(), std::size_t{0});
    for (;;) {
        subsets.push_back(cur);
        // advance to the next combination in lexicographic order
        std::size_t i = k;
        while (i > 0 && cur[i - 1] == n - k + (i - 1))
            --i;
        if (i == 0)
            break;
        ++cur[i - 1];
        for (std::size_t j = i; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return subsets;
}

} // namespace

OracleResult exhaustive_subsets(const ProblemInstance &inst, std::size_t k, const ScaConfig &cfg,
                                const ExhaustiveOptions &opts) {
    if (k < 1 || k > inst.n_antennas)
        throw validation_error("exhaustive_subsets: K must lie in [1, N]");
    const std::uint64_t count = binomial(inst.n_antennas, k);
    if (count > opts.subset_cap)
        throw validation_error("exhaustive_subsets: subset count " + std::to_string(count) +
                               " exceeds cap " + std::to_string(opts.subset_cap));
    const std::size_t restarts = std::max<std::size_t>(1, opts.restarts);

    const auto subsets = enumerate_subsets(inst.n_antennas, k);
    std::vector<double> values(subsets.size());
    std::vector<Beamformer> winners(subsets.size());

    parallel_for(subsets.size(), opts.workers, [&](std::size_t i) {
        const ProblemInstance reduced = inst.reduced(subsets[i]);
        double best = -1.0;
        Beamformer best_w;
        for (std::size_t r = 0; r < restarts; ++r) {
            ScaResult res = sca_solve(reduced, 0.0, cfg, resolve_restart_seed(cfg.seed, r));
            const double snr = min_snr(reduced, res.w);
            if (snr > best) {
                best = snr;
                best_w = std::move(res.w);
            }
        }
        values[i] = best;
        winners[i] = std::move(best_w);
    });

    std::size_t argmax = 0;
    for (std::size_t i = 1; i < values.size(); ++i)
        if (values[i] > values[argmax])
            argmax = i; // strict: ties keep the lexicographically smaller subset

    OracleResult out;
    out.subset = subsets[argmax];
    out.min_snr_linear = values[argmax];
    out.min_snr_db = to_db(out.min_snr_linear);
    out.method = "exhaustive-sca";
    CVec w_reduced = extract_complex(winners[argmax]);
    out.beamformer.assign(inst.n_antennas, cplx(0.0, 0.0));
    for (std::size_t i = 0; i < out.subset.size(); ++i)
        out.beamformer[out.subset[i]] = w_reduced[i];
    if (opts.keep_per_subset) {
        out.per_subset.reserve(subsets.size());
        for (std::size_t i = 0; i < subsets.size(); ++i)
            out.per_subset.emplace_back(subsets[i], values[i]);
    }
    return out;
}

} // namespace spmpcast
