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

#include "gfdm/sweep.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <map>
#include <optional>
#include <thread>

#include "gfdm/channel.hpp"
#include "gfdm/decoupling.hpp"
#include "gfdm/detect.hpp"
#include "gfdm/waveform.hpp"

namespace gfdm {

namespace {

std::uint64_t splitmix64(std::uint64_t x)
{
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

struct SchemeSetup
{
    Scheme scheme;
    std::string name;
    GfdmConfig gfdm;
    PrototypeFilter filter;
    std::optional<TransmitterMatrix> matrix; // stacked-channel receivers and non-decoupled transmitters
    Table1Counts formula;

    CVector transmit(const CVector& d) const
    {
        if (filter.support)
            return fast_modulate(d, filter, gfdm);
        return modulate(d, *matrix);
    }
};

SchemeSetup make_setup(const Scheme& scheme, const SimConfig& cfg, const Constellation& cs)
{
    SchemeSetup s{scheme, scheme.name(), {}, {}, std::nullopt, {}};
    const bool ofdm = scheme.kind == SchemeKind::ofdm;
    s.gfdm.subcarriers = ofdm ? cfg.block_length() : cfg.subcarriers;
    s.gfdm.subsymbols = ofdm ? 1 : cfg.subsymbols;
    s.gfdm.cp_length = cfg.effective_cp_length();
    s.gfdm.constellation = cs;
    s.gfdm.symbol_energy = cs.energy();
    if (scheme.kind == SchemeKind::baseline_rc)
        s.gfdm.filter = {FilterKind::raised_cosine, scheme.roll_off};
    s.gfdm.validate();
    s.filter = make_filter(s.gfdm);
    if (scheme.family() == ReceiverFamily::near_ml || !s.filter.support)
        s.matrix = build_transmitter_matrix(s.gfdm, s.filter);
    s.formula = table1_cm(scheme.family(), s.gfdm.subcarriers, s.gfdm.subsymbols, cfg.tx, cfg.rx);
    return s;
}

struct Accumulator
{
    std::uint64_t errors = 0;
    std::uint64_t symbols = 0;
    DetectionStats stats;
    double seconds = 0.0;

    Accumulator& operator+=(const Accumulator& o)
    {
        errors += o.errors;
        symbols += o.symbols;
        stats += o.stats;
        seconds += o.seconds;
        return *this;
    }
};

using Clock = std::chrono::steady_clock;

double since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

// One channel realization: all SNR points, blocks and schemes.
void run_channel(const SimConfig& cfg, const Constellation& cs, const PdpProfile& pdp,
                 const std::vector<SchemeSetup>& setups, std::size_t h, std::vector<Accumulator>& acc)
{
    const std::size_t D = cfg.block_length();
    const std::size_t L = cfg.effective_cp_length();
    const std::size_t T = cfg.tx;
    const std::size_t n_schemes = setups.size();

    Rng channel_rng(derive_seed(cfg.seed, Stream::channel, h));
    const MimoChannel ch = generate_channel(T, cfg.rx, pdp, D, channel_rng);

    std::vector<std::optional<ProposedDetector>> proposed(n_schemes);
    std::vector<std::optional<OfdmDetector>> ofdm(n_schemes);
    std::vector<CMatrix> stacked(n_schemes);
    for (std::size_t s = 0; s < n_schemes; ++s) {
        const auto& setup = setups[s];
        switch (setup.scheme.kind) {
        case SchemeKind::proposed_dirichlet:
            proposed[s].emplace(compute_blocks(ch, setup.filter, setup.gfdm));
            break;
        case SchemeKind::ofdm:
            ofdm[s].emplace(ch);
            break;
        default:
            stacked[s] = assemble_full_matrix(ch, *setup.matrix);
        }
    }

    for (std::size_t si = 0; si < cfg.snr_db.size(); ++si) {
        double n0 = noise_variance(cfg.snr_db[si], cs.energy());
        if (cfg.cp_energy_loss)
            n0 *= static_cast<double>(D + L) / static_cast<double>(D);

        std::vector<std::optional<BaselineDetector>> baseline(n_schemes);
        for (std::size_t s = 0; s < n_schemes; ++s)
            if (setups[s].scheme.family() == ReceiverFamily::near_ml) {
                const auto t0 = Clock::now();
                baseline[s].emplace(stacked[s], n0, cfg.subsymbols * T, cs.energy());
                acc[si * n_schemes + s].seconds += since(t0);
            }

        for (std::size_t b = 0; b < cfg.n_blocks; ++b) {
            Rng data_rng(derive_seed(cfg.seed, Stream::data, h, b));
            std::uniform_int_distribution<std::size_t> pick(0, cs.size() - 1);
            SymbolIndices sent(T * D);
            for (auto& v : sent)
                v = pick(data_rng);
            const std::vector<CVector> d = unstack(to_symbols(sent, cs), T);

            for (std::size_t s = 0; s < n_schemes; ++s) {
                const auto& setup = setups[s];
                std::vector<CVector> x;
                x.reserve(T);
                for (const auto& dt : d)
                    x.push_back(setup.transmit(dt));
                // Same noise samples for every scheme at this (h, b, snr).
                Rng noise_rng(derive_seed(cfg.seed, Stream::noise, h, b, si));
                const std::vector<CVector> y = apply_channel(x, ch, n0, noise_rng);

                auto& a = acc[si * n_schemes + s];
                const auto t0 = Clock::now();
                SymbolIndices detected;
                if (proposed[s])
                    detected = proposed[s]->detect(
                        receive_transform(y, proposed[s]->system().shift, setup.gfdm.subcarriers, setup.gfdm.subsymbols),
                        cs, a.stats);
                else if (ofdm[s])
                    detected = ofdm[s]->detect(y, cs, a.stats);
                else
                    detected = baseline[s]->detect(stack(y), cs, a.stats);
                a.seconds += since(t0);
                a.errors += count_symbol_errors(sent, detected);
                a.symbols += sent.size();
            }
        }
    }
}

} // namespace

std::uint64_t derive_seed(std::uint64_t master, Stream stream, std::uint64_t a, std::uint64_t b, std::uint64_t c)
{
    std::uint64_t x = splitmix64(master);
    x = splitmix64(x ^ static_cast<std::uint64_t>(stream));
    x = splitmix64(x ^ a);
    x = splitmix64(x ^ b);
    return splitmix64(x ^ c);
}

double noise_variance(double snr_db, double symbol_energy)
{
    if (std::isinf(snr_db) && snr_db > 0)
        return 0.0;
    return symbol_energy / std::pow(10.0, snr_db / 10.0);
}

double TrialRecord::cm_sd_avg() const
{
    return blocks ? static_cast<double>(cm_sd) / static_cast<double>(blocks) : 0.0;
}

double TrialRecord::sd_nodes_avg() const
{
    return blocks ? static_cast<double>(sd_nodes) / static_cast<double>(blocks) : 0.0;
}

double TrialRecord::total_cm_avg() const
{
    if (blocks == 0)
        return 0.0;
    const double blocks_per_channel = static_cast<double>(blocks) / static_cast<double>(channels);
    return static_cast<double>(cm_sqrd) / blocks_per_channel + static_cast<double>(cm_sic) + cm_sd_avg();
}

std::vector<TrialRecord> run_sweep(const SimConfig& cfg)
{
    validate(cfg);
    if (cfg.block_length() > desk_scale_block_limit && !cfg.allow_large)
        throw ConfigError("block length D = " + std::to_string(cfg.block_length()) + " exceeds the desk-scale limit of " +
                          std::to_string(desk_scale_block_limit) + "; pass --large to run it anyway");

    const Constellation cs = Constellation::by_name(cfg.constellation);
    const PdpProfile pdp = PdpProfile::exponential(cfg.effective_channel_taps());

    std::map<std::string, Scheme> unique;
    for (const auto& s : cfg.schemes)
        unique.emplace(s.name(), s);
    std::vector<SchemeSetup> setups;
    for (const auto& [name, scheme] : unique)
        setups.push_back(make_setup(scheme, cfg, cs));

    const std::size_t n_points = cfg.snr_db.size() * setups.size();
    const std::size_t n_threads = std::clamp<std::size_t>(cfg.threads, 1, cfg.n_channels);
    std::vector<std::vector<Accumulator>> partial(n_threads, std::vector<Accumulator>(n_points));
    std::vector<std::exception_ptr> failures(n_threads);

    auto worker = [&](std::size_t id) {
        try {
            for (std::size_t h = id; h < cfg.n_channels; h += n_threads)
                run_channel(cfg, cs, pdp, setups, h, partial[id]);
        } catch (...) {
            failures[id] = std::current_exception();
        }
    };
    if (n_threads == 1) {
        worker(0);
    } else {
        std::vector<std::jthread> pool;
        for (std::size_t id = 0; id < n_threads; ++id)
            pool.emplace_back(worker, id);
    }
    for (const auto& f : failures)
        if (f)
            std::rethrow_exception(f);

    std::vector<TrialRecord> records;
    records.reserve(n_points);
    for (std::size_t si = 0; si < cfg.snr_db.size(); ++si)
        for (std::size_t s = 0; s < setups.size(); ++s) {
            Accumulator total;
            for (const auto& p : partial)
                total += p[si * setups.size() + s];
            const auto& setup = setups[s];
            TrialRecord r;
            r.snr_db = cfg.snr_db[si];
            r.scheme = setup.name;
            r.filter = setup.scheme.filter_name();
            r.subcarriers = setup.gfdm.subcarriers;
            r.subsymbols = setup.gfdm.subsymbols;
            r.tx = cfg.tx;
            r.rx = cfg.rx;
            r.errors = total.errors;
            r.symbols = total.symbols;
            r.cm_sqrd = setup.formula.sqrd;
            r.cm_sic = setup.formula.sic;
            r.cm_sd = total.stats.sd_cm;
            r.sd_nodes = total.stats.sd_nodes;
            r.sic_cm_measured = total.stats.sic_cm;
            r.channels = cfg.n_channels;
            r.blocks = cfg.n_channels * cfg.n_blocks;
            r.wall_seconds = total.seconds;
            records.push_back(std::move(r));
        }
    return records;
}

std::vector<Dimensions> default_verify_grid()
{
    return {{4, 2, 2, 2}, {8, 2, 2, 2}, {4, 4, 2, 2}, {8, 4, 2, 3}};
}

std::vector<ResidualSummary> run_decoupling_check(const std::vector<Dimensions>& grid, std::size_t channels,
                                                  std::uint64_t seed)
{
    std::vector<ResidualSummary> out;
    for (std::size_t g = 0; g < grid.size(); ++g) {
        const auto& dims = grid[g];
        GfdmConfig cfg;
        cfg.subcarriers = dims.subcarriers;
        cfg.subsymbols = dims.subsymbols;
        cfg.cp_length = std::max<std::size_t>(1, cfg.block_length() / 8);
        const PrototypeFilter f = dirichlet_filter(cfg);
        const PdpProfile pdp = PdpProfile::exponential(cfg.cp_length);

        ResidualSummary s{dims.subcarriers, dims.subsymbols, dims.tx, dims.rx, channels, 0.0};
        for (std::size_t h = 0; h < channels; ++h) {
            Rng rng(derive_seed(seed, Stream::channel, h, g));
            const MimoChannel ch = generate_channel(dims.tx, dims.rx, pdp, cfg.block_length(), rng);
            s.max_residual = std::max(s.max_residual, verify_decomposition(ch, f, cfg));
        }
        out.push_back(s);
    }
    return out;
}

} // namespace gfdm
