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

#include "spmpcast/results.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>

namespace spmpcast {

using nlohmann::json;

namespace {

std::string join_subset(const std::vector<std::size_t> &subset) {
    std::string out;
    for (std::size_t i = 0; i < subset.size(); ++i) {
        if (i)
            out += ';';
        out += std::to_string(subset[i]);
    }
    return out;
}

} // namespace

std::string to_csv_line(const ResultRow &row) {
    std::string line = std::to_string(kResultsFormatVersion);
    line += ',' + std::to_string(row.trial);
    line += ',' + std::to_string(row.k);
    line += ',' + row.method;
    line += ',' + (std::isfinite(row.min_snr_db) ? format_double(row.min_snr_db) : "nan");
    line += ',' + join_subset(row.subset);
    line += ',';
    if (std::isfinite(row.lambda_star))
        line += format_double(row.lambda_star);
    line += ',' + std::to_string(row.sca_iters);
    line += ',' + std::to_string(row.mp_iters);
    line += ',' + format_double(row.wall_ms);
    return line;
}

json to_json(const ResultRow &row) {
    json j = {
        {"trial", row.trial},
        {"k", row.k},
        {"method", row.method},
        {"min_snr_db", std::isfinite(row.min_snr_db) ? json(row.min_snr_db) : json(nullptr)},
        {"subset", row.subset},
        {"lambda_star", std::isfinite(row.lambda_star) ? json(row.lambda_star) : json(nullptr)},
        {"sca_iters", row.sca_iters},
        {"mp_iters", row.mp_iters},
        {"wall_ms", row.wall_ms},
    };
    if (!row.error.empty())
        j["error"] = row.error;
    return j;
}

json to_json(const AggregateRow &row) {
    return json{
        {"method", row.method},       {"k", row.k},
        {"mean_snr_db", row.mean_snr_db}, {"mean_time_ms", row.mean_time_ms},
        {"count", row.count},
    };
}

std::vector<AggregateRow> aggregate(const std::vector<ResultRow> &rows) {
    std::map<std::pair<std::string, std::size_t>, AggregateRow> groups;
    for (const auto &row : rows) {
        if (!row.error.empty() || !std::isfinite(row.min_snr_db))
            continue;
        auto &agg = groups[{row.method, row.k}];
        agg.method = row.method;
        agg.k = row.k;
        agg.mean_snr_db += row.min_snr_db;
        agg.mean_time_ms += row.wall_ms;
        agg.count += 1;
    }
    std::vector<AggregateRow> out;
    out.reserve(groups.size());
    for (auto &[key, agg] : groups) {
        agg.mean_snr_db /= static_cast<double>(agg.count);
        agg.mean_time_ms /= static_cast<double>(agg.count);
        out.push_back(std::move(agg));
    }
    return out;
}

void write_text(const std::string &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary);
    if (!out)
        throw std::runtime_error("cannot open " + path + " for writing");
    out << content;
    if (!out)
        throw std::runtime_error("failed writing " + path);
}

void write_rows_csv(const std::string &path, const std::vector<ResultRow> &rows) {
    std::string body = kResultsCsvHeader;
    body += '\n';
    for (const auto &row : rows) {
        body += to_csv_line(row);
        body += '\n';
    }
    write_text(path, body);
}

void write_aggregate_csv(const std::string &path, const std::vector<AggregateRow> &rows) {
    std::string body = "method,k,mean_snr_db,mean_time_ms,count\n";
    for (const auto &row : rows) {
        body += row.method;
        body += ',' + std::to_string(row.k);
        body += ',' + format_double(row.mean_snr_db);
        body += ',' + format_double(row.mean_time_ms);
        body += ',' + std::to_string(row.count);
        body += '\n';
    }
    write_text(path, body);
}

} // namespace spmpcast
