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
//
// Runtime kernel selection.

#include "spmpcast/kernels.hpp"

#include <atomic>
#include <cstdlib>

namespace spmpcast::kernels {

// Defined in kernels_avx2.cpp; nullptr on non-x86 builds.
const KernelTable *avx2_table_impl();

namespace {

bool avx2_supported() {
#if defined(__x86_64__) || defined(_M_X64)
    return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
    return false;
#endif
}

const KernelTable *resolve(std::string_view name) {
    if (name == "scalar")
        return &scalar_table();
    if (name == "avx2")
        return avx2_table();
    if (name == "auto" || name.empty())
        return avx2_table() ? avx2_table() : &scalar_table();
    return nullptr;
}

std::atomic<const KernelTable *> g_active{nullptr};

const KernelTable *init_from_env() {
    const char *env = std::getenv("SPMPCAST_KERNELS");
    const KernelTable *t = resolve(env ? std::string_view(env) : std::string_view("auto"));
    if (!t)
        t = resolve("auto");
    return t;
}

} // namespace

const KernelTable *avx2_table() {
    const KernelTable *t = avx2_table_impl();
    return (t && avx2_supported()) ? t : nullptr;
}

const KernelTable &active() {
    const KernelTable *t = g_active.load(std::memory_order_acquire);
    if (!t) {
        t = init_from_env();
        g_active.store(t, std::memory_order_release);
    }
    return *t;
}

bool set_active(std::string_view name) {
    const KernelTable *t = resolve(name);
    if (!t)
        return false;
    g_active.store(t, std::memory_order_release);
    return true;
}

} // namespace spmpcast::kernels
