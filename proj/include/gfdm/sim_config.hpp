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
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "gfdm/complexity.hpp"

namespace gfdm {

class ConfigError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

enum class SchemeKind
{
    proposed_dirichlet,
    baseline_dirichlet,
    baseline_rc,
    ofdm
};

struct Scheme
{
    SchemeKind kind = SchemeKind::proposed_dirichlet;
    double roll_off = 0.9; // baseline_rc only

    /// "proposed_dirichlet", "baseline_dirichlet", "baseline_rc(0.9)" or "ofdm".
    std::string name() const;
    /// "dirichlet" or "rc(<alpha>)".
    std::string filter_name() const;
    ReceiverFamily family() const;

    /// Accepts the names above; "baseline_rc" alone means roll-off 0.9.
    static Scheme parse(const std::string& text);

    bool operator==(const Scheme&) const = default;
};

/// Monte Carlo sweep parameters. Config files are line-oriented `key = value`
/// text with `#` comments; keys: scheme, K, M, T, R, L, constellation, snr_db,
/// n_channels, n_blocks, seed, out, plus the optional channel_taps.
struct SimConfig
{
    std::vector<Scheme> schemes;
    std::size_t subcarriers = 0; // K
    std::size_t subsymbols = 0;  // M
    std::size_t tx = 0;          // T
    std::size_t rx = 0;          // R
    std::optional<std::size_t> cp_length;    // L, defaults to max(1, D/8)
    std::optional<std::size_t> channel_taps; // defaults to L
    std::string constellation = "qpsk";
    std::vector<double> snr_db; // "inf" disables noise
    std::size_t n_channels = 0;
    std::size_t n_blocks = 0;
    std::uint64_t seed = 0;
    std::string out = "results.csv";

    // Not part of the file format; set from the command line.
    bool cp_energy_loss = false; // scale N0 by (D + L)/D
    bool allow_large = false;
    unsigned threads = 1;

    std::size_t block_length() const { return subcarriers * subsymbols; }
    std::size_t effective_cp_length() const;
    std::size_t effective_channel_taps() const;

    bool operator==(const SimConfig&) const = default;
};

/// Largest block length accepted without allow_large.
inline constexpr std::size_t desk_scale_block_limit = 256;

/// A key/value pair from the command line. Errors cite `flag`, or `--key`
/// when no flag name is given.
struct ConfigOverride
{
    std::string key;
    std::string value;
    std::string flag;
};

/// Parses config text, applies overrides on top, and validates. Errors name
/// the offending line ("<source>:<line>") or flag.
SimConfig parse_config(const std::string& text, const std::vector<ConfigOverride>& overrides = {},
                       const std::string& source = "config");

/// Reads and parses a config file. Throws ConfigError if it cannot be opened.
SimConfig parse_config_file(const std::string& path, const std::vector<ConfigOverride>& overrides = {});

/// Config built from overrides alone (no file).
SimConfig config_from_overrides(const std::vector<ConfigOverride>& overrides);

/// Writes every key in file syntax such that parse_config(serialize_config(c)) == c.
std::string serialize_config(const SimConfig& cfg);

/// Throws ConfigError when counts are zero, L is outside (0, D], L is shorter
/// than the channel memory, or the constellation is unknown.
void validate(const SimConfig& cfg);

/// Shortest round-trip decimal representation.
std::string format_double(double v);

} // namespace gfdm
