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

#include <iostream>

#include "gfdm/dft.hpp"
#include "gfdm/detect.hpp"

namespace gfdm {

namespace {

// Maps decisions made in sorted order back to the original column order.
void unsort(const SymbolIndices& sorted, const std::vector<std::size_t>& perm, SymbolIndices& out, std::size_t offset)
{
    for (std::size_t i = 0; i < sorted.size(); ++i)
        out[offset + perm[i]] = sorted[i];
}

} // namespace

ProposedDetector::ProposedDetector(BlockSystem system)
    : system_(std::move(system)),
      data_perm_inverse_(data_permutation_map(system_.subcarriers, system_.subsymbols, system_.tx).inverse())
{
    factors_.reserve(system_.blocks.size());
    for (const auto& f : system_.blocks)
        factors_.push_back(sqrd(f));
}

SymbolIndices ProposedDetector::detect(const CVector& ybar, const Constellation& cs, DetectionStats& stats) const
{
    const std::size_t rows = system_.subsymbols * system_.rx;
    const std::size_t cols = system_.subsymbols * system_.tx;
    if (static_cast<std::size_t>(ybar.size()) != system_.subcarriers * rows)
        throw std::invalid_argument("ProposedDetector: received vector has the wrong length.");

    SymbolIndices dbar(system_.subcarriers * cols);
    for (std::size_t k = 0; k < system_.subcarriers; ++k) {
        const auto& qr = factors_[k];
        const CVector z =
            qr.q_data().adjoint() * ybar.segment(static_cast<Eigen::Index>(k * rows), static_cast<Eigen::Index>(rows));
        unsort(sphere_decode(qr.r, z, cs, stats), qr.perm, dbar, k * cols);
    }
    return data_perm_inverse_.apply(dbar);
}

BaselineDetector::BaselineDetector(const CMatrix& htilde, double noise_var, std::size_t group_size,
                                   double symbol_energy)
    : group_size_(group_size)
{
    if (group_size_ == 0)
        throw std::invalid_argument("BaselineDetector: group size must be positive.");
    try {
        qr_ = mmse_sqrd(htilde, noise_var, symbol_energy);
    } catch (const SingularMatrixError&) {
        if (noise_var > 0.0)
            throw;
        constexpr double epsilon = 1e-12;
        std::cerr << "warning: stacked channel is rank deficient at N0 = 0; regularizing with " << epsilon << "\n";
        qr_ = mmse_sqrd(htilde, epsilon * symbol_energy, symbol_energy);
    }
}

SymbolIndices BaselineDetector::detect(const CVector& y, const Constellation& cs, DetectionStats& stats) const
{
    if (static_cast<std::size_t>(y.size()) != qr_.data_rows)
        throw std::invalid_argument("BaselineDetector: received vector has the wrong length.");
    const Eigen::Index n = qr_.r.cols();
    const CVector z = qr_.q_data().adjoint() * y;

    SymbolIndices sorted(static_cast<std::size_t>(n));
    CVector decided(n);
    Eigen::Index end = n;
    while (end > 0) {
        const Eigen::Index start = std::max<Eigen::Index>(0, end - static_cast<Eigen::Index>(group_size_));
        const Eigen::Index len = end - start;
        CVector zg = z.segment(start, len);
        if (end < n) {
            zg -= qr_.r.block(start, end, len, n - end) * decided.segment(end, n - end);
            stats.sic_cm += static_cast<std::uint64_t>(len * (n - end));
        }
        const SymbolIndices group = sphere_decode(qr_.r.block(start, start, len, len), zg, cs, stats);
        for (Eigen::Index i = 0; i < len; ++i) {
            sorted[static_cast<std::size_t>(start + i)] = group[static_cast<std::size_t>(i)];
            decided[start + i] = cs[group[static_cast<std::size_t>(i)]];
        }
        end = start;
    }

    SymbolIndices out(static_cast<std::size_t>(n));
    unsort(sorted, qr_.perm, out, 0);
    return out;
}

OfdmDetector::OfdmDetector(const MimoChannel& ch) : tx_(ch.tx()), rx_(ch.rx()), block_length_(ch.block_length())
{
    factors_.reserve(block_length_);
    CMatrix h(static_cast<Eigen::Index>(rx_), static_cast<Eigen::Index>(tx_));
    for (std::size_t q = 0; q < block_length_; ++q) {
        for (std::size_t r = 0; r < rx_; ++r)
            for (std::size_t t = 0; t < tx_; ++t)
                h(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(t)) =
                    ch.freq_response(r, t)[static_cast<Eigen::Index>(q)];
        factors_.push_back(sqrd(h));
    }
}

SymbolIndices OfdmDetector::detect(const std::vector<CVector>& y, const Constellation& cs, DetectionStats& stats) const
{
    if (y.size() != rx_)
        throw std::invalid_argument("OfdmDetector: expected one received block per antenna.");
    std::vector<CVector> spectra;
    spectra.reserve(rx_);
    for (const auto& yr : y) {
        if (static_cast<std::size_t>(yr.size()) != block_length_)
            throw std::invalid_argument("OfdmDetector: received block has the wrong length.");
        spectra.push_back(dft(yr));
    }

    SymbolIndices d(tx_ * block_length_);
    SymbolIndices per_bin(tx_);
    CVector yq(static_cast<Eigen::Index>(rx_));
    for (std::size_t q = 0; q < block_length_; ++q) {
        for (std::size_t r = 0; r < rx_; ++r)
            yq[static_cast<Eigen::Index>(r)] = spectra[r][static_cast<Eigen::Index>(q)];
        const auto& qr = factors_[q];
        const CVector z = qr.q_data().adjoint() * yq;
        std::fill(per_bin.begin(), per_bin.end(), 0);
        unsort(sphere_decode(qr.r, z, cs, stats), qr.perm, per_bin, 0);
        for (std::size_t t = 0; t < tx_; ++t)
            d[t * block_length_ + q] = per_bin[t];
    }
    return d;
}

SymbolIndices detect_proposed(const CVector& ybar, const BlockSystem& blocks, const Constellation& cs,
                              double /*noise_var*/, DetectionStats& stats)
{
    return ProposedDetector(blocks).detect(ybar, cs, stats);
}

SymbolIndices detect_baseline_near_ml(const CVector& y, const CMatrix& htilde, const Constellation& cs,
                                      double noise_var, std::size_t group_size, DetectionStats& stats,
                                      double symbol_energy)
{
    return BaselineDetector(htilde, noise_var, group_size, symbol_energy).detect(y, cs, stats);
}

SymbolIndices detect_ofdm(const std::vector<CVector>& y, const MimoChannel& ch, const Constellation& cs,
                          double /*noise_var*/, DetectionStats& stats)
{
    return OfdmDetector(ch).detect(y, cs, stats);
}

} // namespace gfdm
