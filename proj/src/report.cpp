// SPDX-License-Identifier: Apache-2.0
//
// mimo-gfdm: frequency-domain decoupled detection for MIMO-GFDM
// Copyright (C) 2026 The mimo-gfdm authors
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

#include "gfdm/report.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace gfdm {

namespace {

std::string sig6(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

} // namespace

std::string format_report(const std::vector<TrialRecord>& records)
{
    if (records.empty())
        throw std::invalid_argument("write_report: no records to write.");
    std::vector<const TrialRecord*> rows;
    rows.reserve(records.size());
    for (const auto& r : records)
        rows.push_back(&r);
    std::stable_sort(rows.begin(), rows.end(), [](const TrialRecord* a, const TrialRecord* b) {
        if (a->snr_db != b->snr_db)
            return a->snr_db < b->snr_db;
        return a->scheme < b->scheme;
    });

    std::string out = report_header;
    out += '\n';
    for (const TrialRecord* r : rows) {
        out += sig6(r->snr_db) + ',' + r->scheme + ',' + r->filter + ',' + std::to_string(r->subcarriers) + ',' +
               std::to_string(r->subsymbols) + ',' + std::to_string(r->tx) + ',' + std::to_string(r->rx) + ',' +
               sig6(r->ser()) + ',' + std::to_string(r->errors) + ',' + std::to_string(r->symbols) + ',' +
               std::to_string(r->cm_sqrd) + ',' + std::to_string(r->cm_sic) + ',' + sig6(r->cm_sd_avg()) + ',' +
               sig6(r->sd_nodes_avg()) + ',' + sig6(r->total_cm_avg()) + '\n';
    }
    return out;
}

void write_report(const std::vector<TrialRecord>& records, const std::string& path)
{
    const std::string text = format_report(records);
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out)
        throw std::runtime_error("write_report: cannot open '" + path + "' for writing.");
    out << text;
    out.flush();
    if (!out)
        throw std::runtime_error("write_report: failed writing '" + path + "'.");
}

} // namespace gfdm
