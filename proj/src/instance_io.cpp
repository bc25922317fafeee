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

#include "spmpcast/instance_io.hpp"

#include <fstream>

namespace spmpcast {

using nlohmann::json;

json instance_to_json(const ProblemInstance &inst, const json &generator) {
    json channels = json::array();
    for (const auto &h : inst.channels) {
        json row = json::array();
        for (const auto &v : h)
            row.push_back(json::array({v.real(), v.imag()}));
        channels.push_back(std::move(row));
    }
    json doc = {
        {"format_version", kInstanceFormatVersion},
        {"n", inst.n_antennas},
        {"m", inst.n_users},
        {"power", inst.power},
        {"noise_vars", inst.noise_vars},
        {"channels", std::move(channels)},
    };
    if (!generator.is_null())
        doc["generator"] = generator;
    return doc;
}

void write_instance(const std::string &path, const ProblemInstance &inst, const json &generator) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("write_instance: cannot open " + path + " for writing");
    out << instance_to_json(inst, generator).dump(2) << '\n';
    if (!out)
        throw std::runtime_error("write_instance: failed writing " + path);
}

InstanceData read_instance(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in)
        throw parse_error("cannot open instance file " + path);

    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error &e) {
        throw parse_error("instance file " + path + ": " + e.what());
    }

    try {
        if (!doc.is_object())
            throw parse_error("top-level value is not an object");
        const int version = doc.at("format_version").get<int>();
        if (version != kInstanceFormatVersion)
            throw parse_error("unsupported format_version " + std::to_string(version));
        const auto n = doc.at("n").get<std::size_t>();
        const auto m = doc.at("m").get<std::size_t>();
        const auto power = doc.at("power").get<double>();
        auto noise_vars = doc.at("noise_vars").get<RealVec>();
        const json &channels = doc.at("channels");
        if (!channels.is_array() || channels.size() != m)
            throw parse_error("channels array must have m entries");

        std::vector<CVec> h(m);
        for (std::size_t i = 0; i < m; ++i) {
            const json &row = channels[i];
            if (!row.is_array() || row.size() != n)
                throw parse_error("channel " + std::to_string(i) + " must have n entries");
            h[i].reserve(n);
            for (const json &entry : row) {
                if (!entry.is_array() || entry.size() != 2)
                    throw parse_error("channel entries must be [re, im] pairs");
                h[i].emplace_back(entry[0].get<double>(), entry[1].get<double>());
            }
        }

        InstanceData data;
        data.instance = ProblemInstance::build(std::move(h), std::move(noise_vars), power);
        data.generator = doc.contains("generator") ? doc["generator"] : json(nullptr);
        return data;
    } catch (const parse_error &) {
        throw;
    } catch (const std::exception &e) {
        // schema violations and invalid field values both count as a bad file
        throw parse_error("instance file " + path + ": " + e.what());
    }
}

} // namespace spmpcast
