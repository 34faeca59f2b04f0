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

#pragma once

#include <string>
#include <vector>

#include "gfdm/sweep.hpp"

namespace gfdm {

inline constexpr const char* report_header =
    "snr_db,scheme,filter,K,M,T,R,ser,errors,symbols,cm_sqrd,cm_sic,cm_sd_avg,sd_nodes_avg,total_cm_avg";

/// CSV text for the records, rows sorted by SNR then scheme name, reals with
/// 6 significant digits. Throws std::invalid_argument on an empty list.
std::string format_report(const std::vector<TrialRecord>& records);

/// Writes format_report(records) to `path`. Nothing is created for an empty
/// list; I/O failures throw std::runtime_error.
void write_report(const std::vector<TrialRecord>& records, const std::string& path);

} // namespace gfdm
