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

#include "json.hpp" // vendored nlohmann/json

#include "spmpcast/problem.hpp"

namespace spmpcast {

inline constexpr int kInstanceFormatVersion = 1;

// Instance file: one self-describing JSON document
//   { format_version, n, m, power, noise_vars[], channels[m][n] = [re, im],
//     generator: {...} }
// Keys are emitted sorted, numbers as shortest round-trip decimals, so a
// rerun with the same seed is byte-identical.

struct InstanceData {
    ProblemInstance instance;
    nlohmann::json generator; // provenance metadata, may be null
};

nlohmann::json instance_to_json(const ProblemInstance &inst, const nlohmann::json &generator);

void write_instance(const std::string &path, const ProblemInstance &inst,
                    const nlohmann::json &generator);

// Throws parse_error for unreadable/malformed files (message carries the
// path and, for syntax errors, the byte offset).
InstanceData read_instance(const std::string &path);

} // namespace spmpcast
