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

#include "gfdm/sim_config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <map>
#include <sstream>

#include "gfdm/constellation.hpp"

namespace gfdm {

namespace {

const std::vector<std::string> known_keys = {"scheme", "K",          "M",        "T",    "R",   "L",           "constellation",
                                             "snr_db", "n_channels", "n_blocks", "seed", "out", "channel_taps"};

std::string trim(const std::string& s)
{
    const auto b = s.find_first_not_of(" \t\r\n");
    if (b == std::string::npos)
        return {};
    const auto e = s.find_last_not_of(" \t\r\n");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(std::string value)
{
    value = trim(value);
    if (!value.empty() && value.front() == '[') {
        if (value.back() != ']')
            throw ConfigError("unterminated list, expected ']'");
        value = value.substr(1, value.size() - 2);
    }
    std::vector<std::string> items;
    // Commas inside parentheses belong to the item, e.g. baseline_rc(0.9).
    int depth = 0;
    std::string cur;
    for (char c : value) {
        if (c == '(')
            ++depth;
        else if (c == ')')
            --depth;
        if (c == ',' && depth == 0) {
            items.push_back(trim(cur));
            cur.clear();
        } else {
            cur += c;
        }
    }
    if (!trim(cur).empty() || !items.empty())
        items.push_back(trim(cur));
    for (const auto& it : items)
        if (it.empty())
            throw ConfigError("empty list element");
    return items;
}

std::uint64_t parse_uint(const std::string& text)
{
    const std::string v = trim(text);
    std::uint64_t out = 0;
    const auto* end = v.data() + v.size();
    const auto res = std::from_chars(v.data(), end, out);
    if (v.empty() || res.ec != std::errc() || res.ptr != end)
        throw ConfigError("expected a nonnegative integer, got '" + v + "'");
    return out;
}

double parse_real(const std::string& text)
{
    const std::string v = trim(text);
    if (v == "inf" || v == "+inf")
        return std::numeric_limits<double>::infinity();
    double out = 0.0;
    const auto* end = v.data() + v.size();
    const auto res = std::from_chars(v.data(), end, out);
    if (v.empty() || res.ec != std::errc() || res.ptr != end || std::isnan(out))
        throw ConfigError("expected a number, got '" + v + "'");
    return out;
}

std::size_t parse_count(const std::string& text)
{
    return static_cast<std::size_t>(parse_uint(text));
}

void set_key(SimConfig& cfg, const std::string& key, const std::string& value)
{
    if (key == "scheme") {
        cfg.schemes.clear();
        for (const auto& item : split_list(value))
            cfg.schemes.push_back(Scheme::parse(item));
    } else if (key == "K") {
        cfg.subcarriers = parse_count(value);
    } else if (key == "M") {
        cfg.subsymbols = parse_count(value);
    } else if (key == "T") {
        cfg.tx = parse_count(value);
    } else if (key == "R") {
        cfg.rx = parse_count(value);
    } else if (key == "L") {
        cfg.cp_length = parse_count(value);
    } else if (key == "channel_taps") {
        cfg.channel_taps = parse_count(value);
    } else if (key == "constellation") {
        cfg.constellation = trim(value);
    } else if (key == "snr_db") {
        cfg.snr_db.clear();
        for (const auto& item : split_list(value))
            cfg.snr_db.push_back(parse_real(item));
    } else if (key == "n_channels") {
        cfg.n_channels = parse_count(value);
    } else if (key == "n_blocks") {
        cfg.n_blocks = parse_count(value);
    } else if (key == "seed") {
        cfg.seed = parse_uint(value);
    } else if (key == "out") {
        cfg.out = trim(value);
    } else {
        throw ConfigError("unknown key '" + key + "'");
    }
}

using Origins = std::map<std::string, std::string>;

std::string where(const Origins& origins, const std::string& key)
{
    const auto it = origins.find(key);
    return it == origins.end() ? key : it->second;
}

void validate_with(const SimConfig& cfg, const Origins& origins)
{
    auto fail = [&](const std::string& key, const std::string& msg) { throw ConfigError(where(origins, key) + ": " + msg); };

    if (cfg.schemes.empty())
        fail("scheme", "at least one scheme is required");
    if (cfg.subcarriers == 0)
        fail("K", "K must be positive");
    if (cfg.subsymbols == 0)
        fail("M", "M must be positive");
    if (cfg.tx == 0)
        fail("T", "T must be positive");
    if (cfg.rx == 0)
        fail("R", "R must be positive");
    if (cfg.snr_db.empty())
        fail("snr_db", "at least one SNR point is required");
    if (cfg.n_channels == 0)
        fail("n_channels", "n_channels must be positive");
    if (cfg.n_blocks == 0)
        fail("n_blocks", "n_blocks must be positive");
    const std::size_t D = cfg.block_length();
    const std::size_t L = cfg.effective_cp_length();
    if (L == 0 || L > D)
        fail("L", "CP length " + std::to_string(L) + " must satisfy 0 < L <= D = " + std::to_string(D));
    const std::size_t taps = cfg.effective_channel_taps();
    if (taps == 0)
        fail("channel_taps", "channel_taps must be positive");
    if (L < taps)
        fail(origins.contains("L") ? "L" : "channel_taps",
             "CP length " + std::to_string(L) + " is shorter than the channel memory of " + std::to_string(taps) +
                 " taps");
    try {
        Constellation::by_name(cfg.constellation);
    } catch (const std::invalid_argument& e) {
        fail("constellation", e.what());
    }
}

void apply_overrides(SimConfig& cfg, Origins& origins, const std::vector<ConfigOverride>& overrides)
{
    for (const auto& [key, value, label] : overrides) {
        const std::string flag = label.empty() ? "--" + key : label;
        if (std::find(known_keys.begin(), known_keys.end(), key) == known_keys.end())
            throw ConfigError(flag + ": unknown key '" + key + "'");
        try {
            set_key(cfg, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError(flag + ": " + e.what());
        } catch (const std::invalid_argument& e) {
            throw ConfigError(flag + ": " + e.what());
        }
        origins[key] = flag;
    }
}

} // namespace

std::string format_double(double v)
{
    if (std::isinf(v))
        return v > 0 ? "inf" : "-inf";
    char buf[64];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

std::string Scheme::name() const
{
    switch (kind) {
    case SchemeKind::proposed_dirichlet:
        return "proposed_dirichlet";
    case SchemeKind::baseline_dirichlet:
        return "baseline_dirichlet";
    case SchemeKind::baseline_rc:
        return "baseline_rc(" + format_double(roll_off) + ")";
    case SchemeKind::ofdm:
        return "ofdm";
    }
    return "unknown";
}

std::string Scheme::filter_name() const
{
    return kind == SchemeKind::baseline_rc ? "rc(" + format_double(roll_off) + ")" : "dirichlet";
}

ReceiverFamily Scheme::family() const
{
    switch (kind) {
    case SchemeKind::proposed_dirichlet:
        return ReceiverFamily::proposed;
    case SchemeKind::ofdm:
        return ReceiverFamily::ofdm;
    default:
        return ReceiverFamily::near_ml;
    }
}

Scheme Scheme::parse(const std::string& text)
{
    const std::string t = trim(text);
    if (t == "proposed_dirichlet")
        return {SchemeKind::proposed_dirichlet, 0.9};
    if (t == "baseline_dirichlet")
        return {SchemeKind::baseline_dirichlet, 0.9};
    if (t == "ofdm")
        return {SchemeKind::ofdm, 0.9};
    if (t == "baseline_rc")
        return {SchemeKind::baseline_rc, 0.9};
    const std::string prefix = "baseline_rc(";
    if (t.rfind(prefix, 0) == 0 && t.back() == ')') {
        const double alpha = parse_real(t.substr(prefix.size(), t.size() - prefix.size() - 1));
        if (!(alpha >= 0.0 && alpha <= 1.0))
            throw ConfigError("roll-off must lie in [0, 1], got '" + t + "'");
        return {SchemeKind::baseline_rc, alpha};
    }
    throw ConfigError("unknown scheme '" + t +
                      "' (expected proposed_dirichlet, baseline_dirichlet, baseline_rc(<alpha>) or ofdm)");
}

std::size_t SimConfig::effective_cp_length() const
{
    return cp_length.value_or(std::max<std::size_t>(1, block_length() / 8));
}

std::size_t SimConfig::effective_channel_taps() const
{
    return channel_taps.value_or(effective_cp_length());
}

void validate(const SimConfig& cfg)
{
    validate_with(cfg, {});
}

SimConfig parse_config(const std::string& text, const std::vector<ConfigOverride>& overrides, const std::string& source)
{
    SimConfig cfg;
    Origins origins;
    std::istringstream in(text);
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const std::string here = source + ":" + std::to_string(line_no);
        std::string line = raw.substr(0, raw.find('#'));
        line = trim(line);
        if (line.empty())
            continue;
        const auto eq = line.find('=');
        if (eq == std::string::npos)
            throw ConfigError(here + ": expected 'key = value'");
        const std::string key = trim(line.substr(0, eq));
        const std::string value = line.substr(eq + 1);
        if (std::find(known_keys.begin(), known_keys.end(), key) == known_keys.end())
            throw ConfigError(here + ": unknown key '" + key + "'");
        if (origins.contains(key))
            throw ConfigError(here + ": duplicate key '" + key + "'");
        try {
            set_key(cfg, key, value);
        } catch (const ConfigError& e) {
            throw ConfigError(here + ": " + key + ": " + e.what());
        }
        origins[key] = here;
    }
    apply_overrides(cfg, origins, overrides);
    validate_with(cfg, origins);
    return cfg;
}

SimConfig parse_config_file(const std::string& path, const std::vector<ConfigOverride>& overrides)
{
    std::ifstream in(path);
    if (!in)
        throw ConfigError(path + ": cannot open config file");
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config(buf.str(), overrides, path);
}

SimConfig config_from_overrides(const std::vector<ConfigOverride>& overrides)
{
    return parse_config("", overrides, "flags");
}

std::string serialize_config(const SimConfig& cfg)
{
    std::ostringstream out;
    out << "scheme = ";
    for (std::size_t i = 0; i < cfg.schemes.size(); ++i)
        out << (i ? ", " : "") << cfg.schemes[i].name();
    out << "\nK = " << cfg.subcarriers << "\nM = " << cfg.subsymbols << "\nT = " << cfg.tx << "\nR = " << cfg.rx
        << "\n";
    if (cfg.cp_length)
        out << "L = " << *cfg.cp_length << "\n";
    if (cfg.channel_taps)
        out << "channel_taps = " << *cfg.channel_taps << "\n";
    out << "constellation = " << cfg.constellation << "\nsnr_db = [";
    for (std::size_t i = 0; i < cfg.snr_db.size(); ++i)
        out << (i ? ", " : "") << format_double(cfg.snr_db[i]);
    out << "]\nn_channels = " << cfg.n_channels << "\nn_blocks = " << cfg.n_blocks << "\nseed = " << cfg.seed
        << "\nout = " << cfg.out << "\n";
    return out.str();
}

} // namespace gfdm
