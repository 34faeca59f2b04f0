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

#include <cstdint>

namespace gfdm {

/// Receiver families of the closed-form complexity model.
enum class ReceiverFamily
{
    ofdm,     // SQRD per subcarrier, D problems of size T
    near_ml,  // MMSE-SQRD of the full stacked channel plus group SIC
    proposed  // SQRD per decoupled block, K problems of size MT
};

struct Table1Counts
{
    std::uint64_t sqrd = 0;
    std::uint64_t sic = 0;

    bool operator==(const Table1Counts&) const = default;
};

/// Complex multiplications for the QR stage and the SIC stage needed to
/// detect K*M*T symbols, in exact integer arithmetic (D = K*M):
///   ofdm:     D T^2 R + D T R + (D T^2 - D T)/2,                    SIC 0
///   near_ml:  K^3M^3T^2R + K^2M^2TR + (2K^3M^3T^3 + 3K^2M^2T^2 + KMT)/6,
///             SIC K^2 M^2 T^2
///   proposed: K M^3 T^2 R + K M^2 T R + (K M^2 T^2 - K M T)/2,      SIC 0
/// Throws std::invalid_argument on zero dimensions and std::overflow_error
/// when a count does not fit in 64 bits.
Table1Counts table1_cm(ReceiverFamily family, std::uint64_t K, std::uint64_t M, std::uint64_t T, std::uint64_t R);

} // namespace gfdm
