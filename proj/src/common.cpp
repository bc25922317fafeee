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

#include "spmpcast/common.hpp"

#include <charconv>
#include <cmath>

#include "spmpcast/kernels.hpp"
#include "spmpcast/rng.hpp"

namespace spmpcast {

double norm2_sq(const RealVec &x) { return kernels::active().dot(x.data(), x.data(), x.size()); }

double norm2(const RealVec &x) { return std::sqrt(norm2_sq(x)); }

std::string format_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

double to_db(double linear) { return 10.0 * std::log10(linear); }

std::pair<double, double> SplitMix64::normal_pair() {
    // u1 in (0, 1] so the log is finite.
    double u1 = static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    double u2 = uniform01();
    double r = std::sqrt(-2.0 * std::log(u1));
    double phi = 2.0 * M_PI * u2;
    return {r * std::cos(phi), r * std::sin(phi)};
}

cplx SplitMix64::cnormal() {
    auto [re, im] = normal_pair();
    return cplx(re * M_SQRT1_2, im * M_SQRT1_2);
}

std::uint64_t derive_stream(std::uint64_t parent, std::uint64_t key) {
    SplitMix64 g(parent ^ (0x9E3779B97F4A7C15ULL * (key + 1)));
    return g.next();
}

} // namespace spmpcast
