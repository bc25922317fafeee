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

#include <cstdint>
#include <utility>

#include "spmpcast/common.hpp"

namespace spmpcast {

// SplitMix64 (Steele, Lea, Flood, 2014). Chosen for the reproducibility
// contract: the stream and every distribution below are pinned down to the
// exact sequence of 64-bit draws, so a (seed, stream-key) pair fully
// determines all generated data. Draw counts per distribution:
//   uniform01 / uniform / uniform_int : 1
//   normal_pair / cnormal             : 2 (Box-Muller)
class SplitMix64 {
  public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }

    // [0, 1), 53-bit resolution.
    double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // [0, span). Plain modulo; bias is < 2^-60 for the spans used here.
    std::uint64_t uniform_int(std::uint64_t span) { return next() % span; }

    // Two independent N(0,1) draws (Box-Muller).
    std::pair<double, double> normal_pair();

    // Circularly-symmetric complex normal CN(0,1): variance 1/2 per component.
    cplx cnormal();

  private:
    std::uint64_t state_;
};

// Child-stream derivation: derive(parent, key) seeds an independent
// SplitMix64 stream. Keys are small indices (trial, user, restart, ...).
std::uint64_t derive_stream(std::uint64_t parent, std::uint64_t key);

} // namespace spmpcast
