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

#include "spmpcast/common.hpp"

namespace spmpcast {

inline constexpr int kResultsFormatVersion = 1;
inline constexpr const char *kResultsCsvHeader =
    "format_version,trial,k,method,min_snr_db,subset,lambda_star,sca_iters,mp_iters,wall_ms";

// One benchmark outcome: method is "spmp-sca" or "oracle".
struct ResultRow {
    std::size_t trial = 0;
    std::size_t k = 0;
    std::string method;
    double min_snr_db = 0.0;
    std::vector<std::size_t> subset;
    double lambda_star = std::numeric_limits<double>::quiet_NaN(); // NaN -> empty/null
    std::size_t sca_iters = 0;
    std::size_t mp_iters = 0;
    double wall_ms = 0.0;
    std::string error; // non-empty when the task failed
};

struct AggregateRow {
    std::string method;
    std::size_t k = 0;
    double mean_snr_db = 0.0;
    double mean_time_ms = 0.0;
    std::size_t count = 0; // rows behind the means (failed rows excluded)
};

// Fields joined with ','; the subset cell joins indices with ';'.
std::string to_csv_line(const ResultRow &row);
nlohmann::json to_json(const ResultRow &row);
nlohmann::json to_json(const AggregateRow &row);

// Means per (method, k), ordered by method then k. Rows with an error or
// non-finite SNR are skipped.
std::vector<AggregateRow> aggregate(const std::vector<ResultRow> &rows);

void write_rows_csv(const std::string &path, const std::vector<ResultRow> &rows);

// columns: method,k,mean_snr_db,mean_time_ms,count
void write_aggregate_csv(const std::string &path, const std::vector<AggregateRow> &rows);

void write_text(const std::string &path, const std::string &content);

} // namespace spmpcast
