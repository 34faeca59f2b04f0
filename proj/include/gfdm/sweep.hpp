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
#include <string>
#include <vector>

#include "gfdm/sim_config.hpp"

namespace gfdm {

/// Aggregated outcome of one (SNR, scheme) point of a sweep.
struct TrialRecord
{
    double snr_db = 0.0;
    std::string scheme;
    std::string filter;
    std::size_t subcarriers = 0; // as simulated; OFDM runs with K*M subcarriers and M = 1
    std::size_t subsymbols = 0;
    std::size_t tx = 0;
    std::size_t rx = 0;
    std::uint64_t errors = 0;
    std::uint64_t symbols = 0;
    std::uint64_t cm_sqrd = 0;  // closed-form, once per channel realization
    std::uint64_t cm_sic = 0;   // closed-form, per data block
    std::uint64_t cm_sd = 0;    // measured, summed over all blocks
    std::uint64_t sd_nodes = 0; // measured, summed over all blocks
    std::uint64_t sic_cm_measured = 0;
    std::uint64_t channels = 0;
    std::uint64_t blocks = 0; // channels * blocks per channel
    double wall_seconds = 0.0;

    double ser() const { return symbols ? static_cast<double>(errors) / static_cast<double>(symbols) : 0.0; }
    double cm_sd_avg() const;
    double sd_nodes_avg() const;
    /// SQRD amortized over the blocks of one realization, plus SIC and SD per block.
    double total_cm_avg() const;
};

/// Tags of the independent random streams of a sweep.
enum class Stream : std::uint64_t
{
    channel = 1,
    data = 2,
    noise = 3
};

/// Counter-based seed: a splitmix64 chain over (master, stream, a, b, c).
/// Channel h uses (channel, h); block b of channel h uses (data, h, b); its
/// noise at SNR index s uses (noise, h, b, s). Every trial can therefore be
/// replayed in isolation and the result does not depend on scheduling.
std::uint64_t derive_seed(std::uint64_t master, Stream stream, std::uint64_t a, std::uint64_t b = 0,
                          std::uint64_t c = 0);

/// Noise variance for an SNR in dB (E_s / N0); +inf maps to 0.
double noise_variance(double snr_db, double symbol_energy = 1.0);

/// Runs the Monte Carlo sweep. Output is ordered by SNR (as configured) and
/// then by scheme name, and depends only on the configuration.
/// Throws ConfigError for invalid configurations, including D above
/// desk_scale_block_limit without allow_large.
std::vector<TrialRecord> run_sweep(const SimConfig& cfg);

/// Decoupling residual statistics for one (K, M, T, R) point.
struct ResidualSummary
{
    std::size_t subcarriers = 0;
    std::size_t subsymbols = 0;
    std::size_t tx = 0;
    std::size_t rx = 0;
    std::size_t channels = 0;
    double max_residual = 0.0;
};

struct Dimensions
{
    std::size_t subcarriers, subsymbols, tx, rx;
};

/// Default grid of the `verify` command.
std::vector<Dimensions> default_verify_grid();

/// Maximum decoupling residual of the Dirichlet filter over `channels`
/// random channels (PDP with max(1, D/8) taps) per grid point.
std::vector<ResidualSummary> run_decoupling_check(const std::vector<Dimensions>& grid, std::size_t channels,
                                                  std::uint64_t seed);

} // namespace gfdm
