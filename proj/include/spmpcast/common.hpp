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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace spmpcast {

using cplx = std::complex<double>;
using CVec = std::vector<cplx>;
using RealVec = std::vector<double>;

// Real-embedded beamformer [Re(w); Im(w)], length 2N.
using Beamformer = std::vector<double>;

// Bad arguments / infeasible configuration. CLI exit code 2.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Malformed input file. CLI exit code 3.
struct parse_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Dense row-major real matrix.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<double> data;

    Mat() = default;
    Mat(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c, 0.0) {}

    double &operator()(std::size_t i, std::size_t j) { return data[i * cols + j]; }
    double operator()(std::size_t i, std::size_t j) const { return data[i * cols + j]; }
    double *row(std::size_t i) { return data.data() + i * cols; }
    const double *row(std::size_t i) const { return data.data() + i * cols; }
};

double norm2_sq(const RealVec &x);
double norm2(const RealVec &x);

// Shortest decimal string that round-trips the double (std::to_chars).
// Used for all numeric fields in CSV output so reruns are byte-identical.
std::string format_double(double v);

double to_db(double linear);

} // namespace spmpcast
