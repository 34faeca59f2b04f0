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

#include "gfdm/waveform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "gfdm/dft.hpp"
#include "gfdm/permutation.hpp"

namespace gfdm {

namespace {

void check_dims(std::size_t K, std::size_t M, Eigen::Index len, const char* what)
{
    if (K == 0 || M == 0)
        throw std::invalid_argument(std::string(what) + ": K and M must be positive.");
    if (static_cast<std::size_t>(len) != K * M)
        throw std::invalid_argument(std::string(what) + ": expected length " + std::to_string(K * M) + ", got " +
                                    std::to_string(len) + ".");
}

// Builds a filter from exact frequency samples, scaling to ||g_f||^2 = D.
PrototypeFilter filter_from_freq(std::size_t K, std::size_t M, CVector g_f)
{
    const double d = static_cast<double>(K * M);
    const double energy = g_f.squaredNorm();
    if (energy <= 0.0)
        throw std::invalid_argument("Prototype filter must have nonzero energy.");
    g_f *= std::sqrt(d / energy);

    PrototypeFilter f;
    f.subcarriers = K;
    f.subsymbols = M;
    f.time = idft(g_f) / std::sqrt(d);
    f.freq = std::move(g_f);
    return f;
}

} // namespace

void GfdmConfig::validate() const
{
    if (subcarriers == 0 || subsymbols == 0)
        throw std::invalid_argument("GfdmConfig: K and M must be positive.");
    if (cp_length == 0 || cp_length > block_length())
        throw std::invalid_argument("GfdmConfig: CP length must satisfy 0 < L <= D.");
    if (std::abs(constellation.energy() - symbol_energy) > 1e-12)
        throw std::invalid_argument("GfdmConfig: constellation energy differs from E_s.");
}

PrototypeFilter PrototypeFilter::from_time_domain(std::size_t K, std::size_t M, const CVector& g)
{
    check_dims(K, M, g.size(), "from_time_domain");
    const double energy = g.squaredNorm();
    if (energy <= 0.0)
        throw std::invalid_argument("Prototype filter must have nonzero energy.");

    PrototypeFilter f;
    f.subcarriers = K;
    f.subsymbols = M;
    f.time = g / std::sqrt(energy);
    f.freq = dft_unnormalized(f.time);
    f.support = ici_free_support(f);
    return f;
}

PrototypeFilter PrototypeFilter::from_frequency_domain(std::size_t K, std::size_t M, const CVector& g_f)
{
    check_dims(K, M, g_f.size(), "from_frequency_domain");
    PrototypeFilter f = filter_from_freq(K, M, g_f);
    f.support = ici_free_support(f);
    return f;
}

std::size_t dirichlet_shift(std::size_t K, std::size_t M)
{
    const std::size_t D = K * M;
    // ceil(-M/2) == -floor(M/2)
    return (D + M / 2) % D;
}

PrototypeFilter dirichlet_filter(const GfdmConfig& cfg)
{
    const std::size_t K = cfg.subcarriers;
    const std::size_t M = cfg.subsymbols;
    const std::size_t D = K * M;
    const std::size_t l = dirichlet_shift(K, M);
    const double level = std::sqrt(static_cast<double>(D) / static_cast<double>(M));

    CVector g_f = CVector::Zero(static_cast<Eigen::Index>(D));
    for (std::size_t j = 0; j < M; ++j)
        g_f[static_cast<Eigen::Index>((l + j) % D)] = level;

    PrototypeFilter f = filter_from_freq(K, M, std::move(g_f));
    f.support = FilterSupport{CVector::Constant(static_cast<Eigen::Index>(M), level), l};
    return f;
}

PrototypeFilter rc_filter(const GfdmConfig& cfg, double alpha)
{
    if (!(alpha >= 0.0 && alpha <= 1.0))
        throw std::invalid_argument("rc_filter: roll-off must lie in [0, 1].");
    const std::size_t K = cfg.subcarriers;
    const std::size_t M = cfg.subsymbols;
    const std::size_t D = K * M;
    const double dd = static_cast<double>(D);
    const double centre = static_cast<double>(dirichlet_shift(K, M) + M / 2);
    const double flat_edge = (1.0 - alpha) / 2.0;
    const double stop_edge = (1.0 + alpha) / 2.0;

    CVector g_f = CVector::Zero(static_cast<Eigen::Index>(D));
    for (std::size_t i = 0; i < D; ++i) {
        double off = std::fmod(static_cast<double>(i) - centre, dd);
        if (off < -dd / 2.0)
            off += dd;
        else if (off >= dd / 2.0)
            off -= dd;
        const double x = std::abs(off) / static_cast<double>(M);
        double amp = 0.0;
        if (x < flat_edge || (x == flat_edge && (alpha > 0.0 || off < 0.0)))
            amp = 1.0;
        else if (x > flat_edge && x <= stop_edge)
            amp = 0.5 * (1.0 + std::cos(std::numbers::pi / alpha * (x - flat_edge)));
        g_f[static_cast<Eigen::Index>(i)] = amp;
    }

    PrototypeFilter f = filter_from_freq(K, M, std::move(g_f));
    f.support = ici_free_support(f);
    return f;
}

PrototypeFilter make_filter(const GfdmConfig& cfg)
{
    switch (cfg.filter.kind) {
    case FilterKind::dirichlet:
        return dirichlet_filter(cfg);
    case FilterKind::raised_cosine:
        return rc_filter(cfg, cfg.filter.roll_off);
    case FilterKind::custom:
        break;
    }
    throw std::invalid_argument("make_filter: custom filters must be built from explicit taps.");
}

namespace {

struct WindowScan
{
    std::size_t start = 0;
    double energy = -1.0;
};

WindowScan scan_windows(const PrototypeFilter& f)
{
    const std::size_t D = static_cast<std::size_t>(f.freq.size());
    const std::size_t M = f.subsymbols;
    WindowScan best;
    for (std::size_t s = 0; s < D; ++s) {
        double e = 0.0;
        for (std::size_t j = 0; j < M; ++j)
            e += std::norm(f.freq[static_cast<Eigen::Index>((s + j) % D)]);
        if (e > best.energy) {
            best.energy = e;
            best.start = s;
        }
    }
    return best;
}

FilterSupport window_at(const PrototypeFilter& f, std::size_t start)
{
    const std::size_t D = static_cast<std::size_t>(f.freq.size());
    const std::size_t M = f.subsymbols;
    CVector g1(static_cast<Eigen::Index>(M));
    for (std::size_t j = 0; j < M; ++j)
        g1[static_cast<Eigen::Index>(j)] = f.freq[static_cast<Eigen::Index>((start + j) % D)];
    return {std::move(g1), start};
}

} // namespace

std::optional<FilterSupport> ici_free_support(const PrototypeFilter& f, double tol)
{
    const std::size_t D = static_cast<std::size_t>(f.freq.size());
    const std::size_t M = f.subsymbols;
    if (D == 0 || M == 0 || D != f.block_length())
        return std::nullopt;
    const double total = f.freq.squaredNorm();
    if (total <= 0.0)
        return std::nullopt;

    const WindowScan best = scan_windows(f);
    if (best.energy < (1.0 - tol) * total)
        return std::nullopt;

    const double outside_limit = std::sqrt(tol * total);
    for (std::size_t i = 0; i < D; ++i) {
        const std::size_t rel = (i + D - best.start) % D;
        if (rel >= M && std::abs(f.freq[static_cast<Eigen::Index>(i)]) > outside_limit)
            return std::nullopt;
    }
    return window_at(f, best.start);
}

FilterSupport dominant_window(const PrototypeFilter& f)
{
    if (f.freq.size() == 0 || static_cast<std::size_t>(f.freq.size()) != f.block_length())
        throw std::invalid_argument("dominant_window: filter length does not match K*M.");
    return window_at(f, scan_windows(f).start);
}

TransmitterMatrix build_transmitter_matrix(const GfdmConfig& cfg, const PrototypeFilter& f)
{
    const std::size_t K = cfg.subcarriers;
    const std::size_t M = cfg.subsymbols;
    const std::size_t D = K * M;
    if (f.subcarriers != K || f.subsymbols != M || static_cast<std::size_t>(f.time.size()) != D)
        throw std::invalid_argument("build_transmitter_matrix: filter dimensions do not match the configuration.");

    const auto n_d = static_cast<Eigen::Index>(D);
    CMatrix a(n_d, n_d);
    for (std::size_t m = 0; m < M; ++m)
        for (std::size_t k = 0; k < K; ++k) {
            const auto col = static_cast<Eigen::Index>(m * K + k);
            for (std::size_t n = 0; n < D; ++n) {
                const double phase = 2.0 * std::numbers::pi * static_cast<double>((k * n) % K) / static_cast<double>(K);
                a(static_cast<Eigen::Index>(n), col) =
                    f.time[static_cast<Eigen::Index>((n + D - m * K) % D)] * std::polar(1.0, phase);
            }
        }
    return {std::move(a)};
}

CVector modulate(const CVector& d, const TransmitterMatrix& a)
{
    if (d.size() != a.matrix.cols())
        throw std::invalid_argument("modulate: data length does not match the transmitter matrix.");
    return a.matrix * d;
}

CVector fast_modulate(const CVector& d, const PrototypeFilter& f, const GfdmConfig& cfg)
{
    if (!f.support)
        throw std::invalid_argument("fast_modulate: filter is not ICI-free (no frequency support).");
    const std::size_t K = cfg.subcarriers;
    const std::size_t M = cfg.subsymbols;
    const std::size_t D = K * M;
    if (static_cast<std::size_t>(d.size()) != D || f.block_length() != D)
        throw std::invalid_argument("fast_modulate: length mismatch.");

    const CVector& g1 = f.support->window;
    const std::size_t l = f.support->shift;
    const double inv_sqrt_k = 1.0 / std::sqrt(static_cast<double>(K));

    // Per subcarrier: z[kM + j] = g1[j] * (W_M d_k)[(j + l) mod M] / sqrt(K)
    CVector z(static_cast<Eigen::Index>(D));
    CVector dk(static_cast<Eigen::Index>(M));
    for (std::size_t k = 0; k < K; ++k) {
        for (std::size_t m = 0; m < M; ++m)
            dk[static_cast<Eigen::Index>(m)] = d[static_cast<Eigen::Index>(m * K + k)];
        const CVector spectrum = dft(dk);
        for (std::size_t j = 0; j < M; ++j)
            z[static_cast<Eigen::Index>(k * M + j)] =
                g1[static_cast<Eigen::Index>(j)] * spectrum[static_cast<Eigen::Index>((j + l) % M)] * inv_sqrt_k;
    }
    // A d = W_D^H Pi_D^l z
    return idft(Permutation::cyclic_shift(D, static_cast<std::int64_t>(l)).apply(z));
}

} // namespace gfdm
