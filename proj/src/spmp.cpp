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

#include "spmpcast/spmp.hpp"

#include <chrono>
#include <cmath>
#include <limits>
#include <stdexcept>

#include "spmpcast/kernels.hpp"

namespace spmpcast {

namespace {

// Floor applied to the simplex block before/after the exponential mirror
// step; keeps log finite under pathological underflow, numerically inert.
constexpr double kSimplexFloor = 1e-300;

struct Workspace {
    RealVec gw, gy, gs;
    RealVec w2, y2, s2;

    void resize(std::size_t dim, std::size_t m) {
        gw.resize(dim);
        gy.resize(m);
        gs.resize(dim);
        w2.resize(dim);
        y2.resize(m);
        s2.resize(dim);
    }
};

Workspace &tls_workspace() {
    thread_local Workspace ws;
    return ws;
}

// Mirror step for the simplex block: y2 = y * exp(-alpha * gy), floored.
void entropy_step(const RealVec &y, double alpha, const RealVec &gy, RealVec &y2) {
    for (std::size_t m = 0; m < y.size(); ++m) {
        double v = y[m] * std::exp(-alpha * gy[m]);
        if (!std::isfinite(v))
            throw std::runtime_error("spmp: exponential mirror step overflowed "
                                     "(step size too large)");
        y2[m] = std::max(v, kSimplexFloor);
    }
}

} // namespace

SaddleState SaddleState::initial(RealVec w0, std::size_t n_users) {
    if (n_users == 0)
        throw validation_error("SaddleState: need at least one user");
    SaddleState st;
    st.w = std::move(w0);
    st.y.assign(n_users, 1.0 / static_cast<double>(n_users));
    st.s.assign(st.w.size(), 0.0);
    st.rw = st.w;
    st.ry = st.y;
    st.rs = st.s;
    st.sum_w.assign(st.w.size(), 0.0);
    st.sum_y.assign(n_users, 0.0);
    st.sum_s.assign(st.w.size(), 0.0);
    st.t = 0;
    return st;
}

namespace {
RealVec scaled_copy(const RealVec &v, std::size_t t) {
    RealVec out = v;
    if (t > 0)
        kernels::active().scale(1.0 / static_cast<double>(t), out.data(), out.size());
    return out;
}
} // namespace

RealVec SaddleState::avg_w() const { return t == 0 ? w : scaled_copy(sum_w, t); }
RealVec SaddleState::avg_y() const { return t == 0 ? y : scaled_copy(sum_y, t); }
RealVec SaddleState::avg_s() const { return t == 0 ? s : scaled_copy(sum_s, t); }

void vector_field(const SurrogateModel &model, const RealVec &w, const RealVec &y,
                  const RealVec &s, RealVec &g_w, RealVec &g_y, RealVec &g_s) {
    const auto &k = kernels::active();
    const std::size_t d = model.dim;
    const std::size_t m = model.n_users;
    g_w.resize(d);
    g_y.resize(m);
    g_s.resize(d);

    // g_w = A^T y + lambda s
    k.matvec_t(model.a.data.data(), m, d, y.data(), g_w.data());
    if (model.lambda != 0.0)
        k.axpy(model.lambda, s.data(), g_w.data(), d);

    // g_y = -(A w + b)
    k.matvec(model.a.data.data(), m, d, w.data(), g_y.data());
    for (std::size_t i = 0; i < m; ++i)
        g_y[i] = -(g_y[i] + model.b[i]);

    // g_s = -lambda w
    k.axpby(-model.lambda, w.data(), 0.0, w.data(), g_s.data(), d);
}

RealVec mirror_grad(const RealVec &w, const RealVec &y, const RealVec &s) {
    RealVec out;
    out.reserve(w.size() + y.size() + s.size());
    out.insert(out.end(), w.begin(), w.end());
    for (double v : y) {
        if (!(v > 0.0))
            throw std::domain_error("mirror_grad: simplex block must be strictly positive");
        out.push_back(1.0 + std::log(std::max(v, kSimplexFloor)));
    }
    out.insert(out.end(), s.begin(), s.end());
    return out;
}

void mirror_grad_inverse(const RealVec &dual, std::size_t dim, std::size_t n_users, RealVec &w,
                         RealVec &y, RealVec &s) {
    if (dual.size() != 2 * dim + n_users)
        throw validation_error("mirror_grad_inverse: stacked vector has wrong length");
    w.assign(dual.begin(), dual.begin() + dim);
    y.resize(n_users);
    for (std::size_t i = 0; i < n_users; ++i)
        y[i] = std::exp(dual[dim + i] - 1.0);
    s.assign(dual.begin() + dim + n_users, dual.end());
}

void project_ball(RealVec &u, double radius) {
    if (!(radius > 0.0))
        throw validation_error("project_ball: radius must be positive");
    const double nrm = norm2(u);
    if (nrm > radius)
        kernels::active().scale(radius / nrm, u.data(), u.size());
}

void project_group_ball(RealVec &s) {
    if (s.size() % 2 != 0)
        throw validation_error("project_group_ball: vector length must be even");
    const std::size_t p = s.size() / 2;
    for (std::size_t j = 0; j < p; ++j) {
        const double nj = std::sqrt(s[j] * s[j] + s[j + p] * s[j + p]);
        if (nj > 1.0) {
            s[j] /= nj;
            s[j + p] /= nj;
        }
    }
}

void project_simplex_kl(RealVec &y) {
    double sum = 0.0;
    for (double v : y) {
        if (!(v > 0.0))
            throw std::domain_error("project_simplex_kl: entries must be strictly positive");
        sum += v;
    }
    if (sum != 1.0)
        for (auto &v : y)
            v /= sum;
}

void mp_iteration(const SurrogateModel &model, SaddleState &state, double alpha) {
    if (!(alpha >= 0.0))
        throw validation_error("mp_iteration: step size must be nonnegative");
    const auto &k = kernels::active();
    const std::size_t d = model.dim;
    const std::size_t m = model.n_users;
    const double radius = std::sqrt(model.power);
    Workspace &ws = tls_workspace();
    ws.resize(d, m);

    // Extragradient half-step: r_{t+1} from z_t along psi(z_t).
    vector_field(model, state.w, state.y, state.s, ws.gw, ws.gy, ws.gs);
    k.axpby(1.0, state.w.data(), -alpha, ws.gw.data(), state.rw.data(), d);
    entropy_step(state.y, alpha, ws.gy, state.ry);
    k.axpby(1.0, state.s.data(), -alpha, ws.gs.data(), state.rs.data(), d);
    project_ball(state.rw, radius);
    project_simplex_kl(state.ry);
    project_group_ball(state.rs);

    // Corrected step: z_{t+1} from z_t along psi(r_{t+1}).
    vector_field(model, state.rw, state.ry, state.rs, ws.gw, ws.gy, ws.gs);
    k.axpby(1.0, state.w.data(), -alpha, ws.gw.data(), state.w.data(), d);
    entropy_step(state.y, alpha, ws.gy, ws.y2);
    state.y.swap(ws.y2);
    k.axpby(1.0, state.s.data(), -alpha, ws.gs.data(), state.s.data(), d);
    project_ball(state.w, radius);
    project_simplex_kl(state.y);
    project_group_ball(state.s);

    k.axpy(1.0, state.rw.data(), state.sum_w.data(), d);
    k.axpy(1.0, state.ry.data(), state.sum_y.data(), m);
    k.axpy(1.0, state.rs.data(), state.sum_s.data(), d);
    ++state.t;
}

double duality_gap(const SurrogateModel &model, const RealVec &w, const RealVec &y,
                   const RealVec &s) {
    const auto &k = kernels::active();
    const std::size_t d = model.dim;
    const std::size_t m = model.n_users;

    // Primal envelope: max over the dual set in closed form.
    double primal = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i)
        primal = std::max(primal, k.dot(model.a.row(i), w.data(), d) + model.b[i]);
    primal += model.lambda * k.group_l12(w.data(), d / 2);

    // Dual envelope: min over the ball is -sqrt(P) * ||A^T y + lambda s||.
    Workspace &ws = tls_workspace();
    ws.resize(d, m);
    k.matvec_t(model.a.data.data(), m, d, y.data(), ws.gw.data());
    if (model.lambda != 0.0)
        k.axpy(model.lambda, s.data(), ws.gw.data(), d);
    const double dual = k.dot(y.data(), model.b.data(), m) -
                        std::sqrt(model.power) * std::sqrt(k.dot(ws.gw.data(), ws.gw.data(), d));

    return primal - dual;
}

std::pair<Beamformer, SolverReport> solve_subproblem(const SurrogateModel &model, SaddleState init,
                                                     const SpmpOptions &opts) {
    if (opts.max_iters < 1)
        throw validation_error("solve_subproblem: max_iters must be at least 1");
    if (init.w.size() != model.dim || init.y.size() != model.n_users)
        throw validation_error("solve_subproblem: state dimensions do not match the model");
    if (!is_feasible(init.w, model.power))
        throw validation_error("solve_subproblem: initial point violates the power budget");

    const auto t_start = std::chrono::steady_clock::now();

    const double tol = opts.gap_tol >= 0.0
                           ? opts.gap_tol
                           : 1e-5 * (1.0 + std::abs(surrogate_value(model, init.w)));
    // Zero model: the field vanishes and any step is a fixed point.
    const double alpha =
        model.lipschitz > 0.0 ? opts.step_safety / (2.0 * model.lipschitz) : 0.0;
    const std::size_t every = opts.gap_check_every > 0 ? opts.gap_check_every : 25;

    SolverReport report;
    SaddleState state = std::move(init);
    for (std::size_t t = 1; t <= opts.max_iters; ++t) {
        mp_iteration(model, state, alpha);
        if (t % every == 0 || t == opts.max_iters) {
            const double gap = duality_gap(model, state.avg_w(), state.avg_y(), state.avg_s());
            report.gap_trace.push_back({t, gap});
            if (std::isfinite(tol) && gap <= tol)
                break;
        }
    }
    report.iterations = state.t;

    // Theory certifies the ergodic average; practice often favors the last
    // corrected iterate. Keep whichever has the smaller surrogate value.
    RealVec avg = state.avg_w();
    const double sv_last = surrogate_value(model, state.rw);
    const double sv_avg = surrogate_value(model, avg);
    Beamformer result;
    if (sv_last < sv_avg) {
        result = state.rw;
        report.used_average = false;
        report.final_gap = duality_gap(model, state.rw, state.ry, state.rs);
    } else {
        result = std::move(avg);
        report.used_average = true;
        report.final_gap = duality_gap(model, result, state.avg_y(), state.avg_s());
    }

    report.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t_start)
            .count();
    return {std::move(result), std::move(report)};
}

} // namespace spmpcast
