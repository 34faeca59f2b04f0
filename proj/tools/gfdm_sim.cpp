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

// Command-line front end: Monte Carlo sweeps, closed-form complexity and the
// decoupling self-check.

#include <cstdio>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "gfdm/complexity.hpp"
#include "gfdm/report.hpp"
#include "gfdm/sim_config.hpp"
#include "gfdm/sweep.hpp"

namespace {

int run_simulate(const std::string& config_path, const std::vector<gfdm::ConfigOverride>& overrides, bool large,
                 bool cp_loss, unsigned threads)
{
    gfdm::SimConfig cfg = gfdm::parse_config_file(config_path, overrides);
    cfg.allow_large = large;
    cfg.cp_energy_loss = cp_loss;
    cfg.threads = threads;
    if (cfg.block_length() > gfdm::desk_scale_block_limit && large)
        std::cerr << "warning: full-scale block length D = " << cfg.block_length()
                  << "; the stacked-channel MMSE-SQRD of the baseline is very expensive\n";

    const auto records = gfdm::run_sweep(cfg);
    gfdm::write_report(records, cfg.out);
    for (const auto& r : records)
        std::printf("snr=%-6s %-20s ser=%.4e  sd_nodes/block=%.1f  time=%.2fs\n", gfdm::format_double(r.snr_db).c_str(),
                    r.scheme.c_str(), r.ser(), r.sd_nodes_avg(), r.wall_seconds);
    std::printf("wrote %s\n", cfg.out.c_str());
    return 0;
}

int run_complexity(const std::string& scheme_name, std::uint64_t K, std::uint64_t M, std::uint64_t T, std::uint64_t R)
{
    const gfdm::Scheme scheme = gfdm::Scheme::parse(scheme_name);
    // OFDM is evaluated at the same block length, i.e. K*M subcarriers.
    const bool ofdm = scheme.kind == gfdm::SchemeKind::ofdm;
    const auto counts = gfdm::table1_cm(scheme.family(), ofdm ? K * M : K, ofdm ? 1 : M, T, R);
    std::printf("scheme,K,M,T,R,cm_sqrd,cm_sic\n%s,%llu,%llu,%llu,%llu,%llu,%llu\n", scheme.name().c_str(),
                static_cast<unsigned long long>(ofdm ? K * M : K), static_cast<unsigned long long>(ofdm ? 1 : M),
                static_cast<unsigned long long>(T), static_cast<unsigned long long>(R),
                static_cast<unsigned long long>(counts.sqrd), static_cast<unsigned long long>(counts.sic));
    return 0;
}

int run_verify(std::size_t channels, std::uint64_t seed)
{
    constexpr double limit = 1e-10;
    double worst = 0.0;
    for (const auto& s : gfdm::run_decoupling_check(gfdm::default_verify_grid(), channels, seed)) {
        std::printf("K=%zu M=%zu T=%zu R=%zu channels=%zu max_residual=%.3e\n", s.subcarriers, s.subsymbols, s.tx, s.rx,
                    s.channels, s.max_residual);
        worst = std::max(worst, s.max_residual);
    }
    std::printf("max residual %.3e (%s, limit %.0e)\n", worst, worst <= limit ? "ok" : "FAILED", limit);
    return worst <= limit ? 0 : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"MIMO-GFDM frequency-domain decoupling simulator"};
    app.require_subcommand(1);

    auto* sim = app.add_subcommand("simulate", "Run a seeded Monte Carlo SER/complexity sweep");
    std::string config_path;
    std::string scheme, snr, out;
    std::uint64_t seed = 0;
    bool large = false, cp_loss = false;
    unsigned threads = std::max(1u, std::thread::hardware_concurrency());
    sim->add_option("--config", config_path, "Key-value config file")->required()->check(CLI::ExistingFile);
    auto* scheme_opt = sim->add_option("--scheme", scheme, "Scheme(s), comma separated");
    auto* snr_opt = sim->add_option("--snr", snr, "SNR points in dB, comma separated");
    auto* seed_opt = sim->add_option("--seed", seed, "Master seed");
    auto* out_opt = sim->add_option("--out", out, "Output CSV path");
    sim->add_flag("--large", large, "Allow full-scale block lengths");
    sim->add_flag("--cp-loss", cp_loss, "Charge the CP energy to the SNR (N0 scaled by (D+L)/D)");
    sim->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);

    auto* cx = app.add_subcommand("complexity", "Print closed-form SQRD/SIC multiplication counts");
    std::string cx_scheme;
    std::uint64_t K = 0, M = 0, T = 0, R = 0;
    cx->add_option("--scheme", cx_scheme, "proposed_dirichlet, baseline_dirichlet, baseline_rc or ofdm")->required();
    cx->add_option("-K", K, "Subcarriers")->required();
    cx->add_option("-M", M, "Subsymbols")->required();
    cx->add_option("-T", T, "Transmit antennas")->required();
    cx->add_option("-R", R, "Receive antennas")->required();

    auto* ver = app.add_subcommand("verify", "Check the block decomposition on random channels");
    std::size_t channels = 100;
    std::uint64_t verify_seed = 0;
    ver->add_option("--channels", channels, "Random channels per grid point");
    ver->add_option("--seed", verify_seed, "Master seed");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*sim) {
            std::vector<gfdm::ConfigOverride> overrides;
            if (*scheme_opt)
                overrides.push_back({"scheme", scheme, "--scheme"});
            if (*snr_opt)
                overrides.push_back({"snr_db", snr, "--snr"});
            if (*seed_opt)
                overrides.push_back({"seed", std::to_string(seed), "--seed"});
            if (*out_opt)
                overrides.push_back({"out", out, "--out"});
            return run_simulate(config_path, overrides, large, cp_loss, threads);
        }
        if (*cx)
            return run_complexity(cx_scheme, K, M, T, R);
        if (*ver)
            return run_verify(channels, verify_seed);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
