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

#include <cstddef>
#include <functional>

namespace spmpcast {

// Hardware thread count honoring the SPMPCAST_WORKERS environment variable
// (an explicit `workers` argument elsewhere always wins over the env var).
std::size_t default_workers();

// Runs fn(0..count-1) across up to `workers` threads (0 -> default_workers).
// Tasks must write to disjoint slots; the first exception thrown by any
// task is rethrown on the calling thread after all tasks finish.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t)> &fn);

} // namespace spmpcast
