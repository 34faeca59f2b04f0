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

#include "gfdm/decoupling.hpp"

#include <cmath>
#include <stdexcept>

#include "gfdm/dft.hpp"

namespace gfdm {

namespace {

CMatrix kron_identity_left(std::size_t copies, const CMatrix& m)
{
    const auto n = m.rows();
    const auto c = static_cast<Eigen::Index>(copies);
    CMatrix out = CMatrix::Zero(c * n, c * m.cols());
    for (Eigen::Index i = 0; i < c; ++i)
        out.block(i * n, i * m.cols(), n, m.cols()) = m;
    return out;
}

} // namespace

CMatrix BlockSystem::block_diagonal() const
{
    Eigen::Index rows = 0, cols = 0;
    for (const auto& b : blocks) {
        rows += b.rows();
        cols += b.cols();
    }
    CMatrix out = CMatrix::Zero(rows, cols);
    Eigen::Index r = 0, c = 0;
    for (const auto& b : blocks) {
        out.block(r, c, b.rows(), b.cols()) = b;
        r += b.rows();
        c += b.cols();
    }
    return out;
}

Permutation receive_interleaver(std::size_t K, std::size_t M, std::size_t R)
{
    return Permutation::interleave(K, R).kron_identity(M);
}

Permutation data_permutation_map(std::size_t K, std::size_t M, std::size_t T)
{
    return Permutation::compose(Permutation::interleave(K, T).kron_identity(M),
                                Permutation::block_repeat(T, Permutation::interleave(K, M)));
}

CVector receive_transform(const std::vector<CVector>& y, std::size_t shift, std::size_t K, std::size_t M)
{
    const std::size_t D = K * M;
    const std::size_t R = y.size();
    if (R == 0 || D == 0)
        throw std::invalid_argument("receive_transform: empty input.");
    CVector shifted(static_cast<Eigen::Index>(R * D));
    for (std::size_t r = 0; r < R; ++r) {
        if (static_cast<std::size_t>(y[r].size()) != D)
            throw std::invalid_argument("receive_transform: antenna signal length differs from K*M.");
        const CVector spectrum = dft(y[r]);
        // Pi_D^{-l}: shift up by l
        for (std::size_t i = 0; i < D; ++i)
            shifted[static_cast<Eigen::Index>(r * D + i)] = spectrum[static_cast<Eigen::Index>((i + shift) % D)];
    }
    return receive_interleaver(K, M, R).apply(shifted);
}

CVector data_permutation(const CVector& d, std::size_t K, std::size_t M, std::size_t T)
{
    if (static_cast<std::size_t>(d.size()) != K * M * T)
        throw std::invalid_argument("data_permutation: expected length K*M*T.");
    return data_permutation_map(K, M, T).apply(d);
}

CVector inverse_data_permutation(const CVector& dbar, std::size_t K, std::size_t M, std::size_t T)
{
    if (static_cast<std::size_t>(dbar.size()) != K * M * T)
        throw std::invalid_argument("inverse_data_permutation: expected length K*M*T.");
    return data_permutation_map(K, M, T).inverse().apply(dbar);
}

BlockSystem compute_blocks(const MimoChannel& ch, const PrototypeFilter& f, const GfdmConfig& cfg)
{
    if (!f.support)
        throw std::invalid_argument("compute_blocks: filter is not ICI-free; frequency-domain decoupling does not apply.");
    return compute_blocks(ch, *f.support, cfg);
}

BlockSystem compute_blocks(const MimoChannel& ch, const FilterSupport& support, const GfdmConfig& cfg)
{
    const std::size_t K = cfg.subcarriers;
    const std::size_t M = cfg.subsymbols;
    const std::size_t D = K * M;
    const std::size_t T = ch.tx();
    const std::size_t R = ch.rx();
    if (ch.block_length() != D || static_cast<std::size_t>(support.window.size()) != M)
        throw std::invalid_argument("compute_blocks: channel or filter dimensions do not match the configuration.");
    const std::size_t l = support.shift % D;

    // The bin-to-subsymbol map is diag(g_1) Pi_M^{-l} W_M: row j is
    // g_1[j] times row (j + l) mod M of W_M. The exponent is -l, not -1; the
    // two agree only when l = 1 (mod M), and only -l reproduces U Htilde
    // (checked by verify_decomposition with M = 4, where l = 2).
    const CMatrix wm = dft_matrix(M);
    const double inv_sqrt_k = 1.0 / std::sqrt(static_cast<double>(K));
    const auto mm = static_cast<Eigen::Index>(M);
    CMatrix shaping(mm, mm);
    for (std::size_t j = 0; j < M; ++j)
        shaping.row(static_cast<Eigen::Index>(j)) =
            inv_sqrt_k * support.window[static_cast<Eigen::Index>(j)] * wm.row(static_cast<Eigen::Index>((j + l) % M));

    BlockSystem sys;
    sys.subcarriers = K;
    sys.subsymbols = M;
    sys.tx = T;
    sys.rx = R;
    sys.shift = l;
    sys.blocks.assign(K, CMatrix::Zero(static_cast<Eigen::Index>(M * R), static_cast<Eigen::Index>(M * T)));

    for (std::size_t r = 0; r < R; ++r)
        for (std::size_t t = 0; t < T; ++t) {
            const CVector& hf = ch.freq_response(r, t);
            for (std::size_t k = 0; k < K; ++k) {
                auto e = sys.blocks[k].block(static_cast<Eigen::Index>(r * M), static_cast<Eigen::Index>(t * M), mm, mm);
                for (std::size_t j = 0; j < M; ++j)
                    e.row(static_cast<Eigen::Index>(j)) =
                        hf[static_cast<Eigen::Index>((k * M + j + l) % D)] * shaping.row(static_cast<Eigen::Index>(j));
            }
        }
    return sys;
}

CMatrix dense_receive_matrix(std::size_t K, std::size_t M, std::size_t R, std::size_t shift)
{
    const std::size_t D = K * M;
    const CMatrix per_antenna =
        Permutation::cyclic_shift(D, -static_cast<std::int64_t>(shift)).to_dense() * dft_matrix(D);
    return receive_interleaver(K, M, R).to_dense() * kron_identity_left(R, per_antenna);
}

double verify_decomposition(const MimoChannel& ch, const PrototypeFilter& f, const GfdmConfig& cfg)
{
    const std::size_t K = cfg.subcarriers;
    const std::size_t M = cfg.subsymbols;
    const FilterSupport support = f.support ? *f.support : dominant_window(f);

    const CMatrix htilde = assemble_full_matrix(ch, build_transmitter_matrix(cfg, f));
    const double norm = htilde.norm();
    if (norm == 0.0)
        return 0.0;

    const BlockSystem sys = compute_blocks(ch, support, cfg);
    const CMatrix u = dense_receive_matrix(K, M, ch.rx(), support.shift);
    const CMatrix p = data_permutation_map(K, M, ch.tx()).to_dense();
    return (u * htilde - sys.block_diagonal() * p).norm() / norm;
}

} // namespace gfdm
