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

#include "gfdm/channel.hpp"

#include <cmath>
#include <stdexcept>

#include "gfdm/dft.hpp"

namespace gfdm {

PdpProfile PdpProfile::exponential(std::size_t taps, double decay_db)
{
    if (taps == 0)
        throw std::invalid_argument("PdpProfile: at least one tap is required.");
    PdpProfile pdp;
    pdp.power.resize(taps);
    if (taps == 1) {
        pdp.power[0] = 1.0;
        return pdp;
    }
    const double step_db = decay_db / static_cast<double>(taps - 1);
    double sum = 0.0;
    for (std::size_t i = 0; i < taps; ++i) {
        pdp.power[i] = std::pow(10.0, -step_db * static_cast<double>(i) / 10.0);
        sum += pdp.power[i];
    }
    for (double& p : pdp.power)
        p /= sum;
    return pdp;
}

MimoChannel::MimoChannel(std::size_t tx, std::size_t rx, std::size_t block_length, std::vector<CVector> taps)
    : tx_(tx), rx_(rx), block_length_(block_length), taps_(std::move(taps))
{
    if (tx_ == 0 || rx_ == 0 || block_length_ == 0)
        throw std::invalid_argument("MimoChannel: antenna counts and block length must be positive.");
    if (taps_.size() != tx_ * rx_)
        throw std::invalid_argument("MimoChannel: expected one impulse response per antenna pair.");
    freq_.reserve(taps_.size());
    for (const auto& h : taps_) {
        if (static_cast<std::size_t>(h.size()) > block_length_)
            throw std::invalid_argument("MimoChannel: impulse response longer than the block.");
        memory_ = std::max(memory_, static_cast<std::size_t>(h.size()));
        CVector padded = CVector::Zero(static_cast<Eigen::Index>(block_length_));
        padded.head(h.size()) = h;
        freq_.push_back(dft_unnormalized(padded));
    }
}

MimoChannel MimoChannel::identity(std::size_t tx, std::size_t rx, std::size_t block_length)
{
    std::vector<CVector> taps;
    for (std::size_t r = 0; r < rx; ++r)
        for (std::size_t t = 0; t < tx; ++t)
            taps.push_back(CVector::Constant(1, r == t ? cd(1.0) : cd(0.0)));
    return {tx, rx, block_length, std::move(taps)};
}

MimoChannel generate_channel(std::size_t tx, std::size_t rx, const PdpProfile& pdp, std::size_t block_length,
                             Rng& rng)
{
    if (pdp.taps() == 0)
        throw std::invalid_argument("generate_channel: empty power delay profile.");
    std::vector<CVector> taps;
    taps.reserve(tx * rx);
    for (std::size_t p = 0; p < tx * rx; ++p) {
        CVector h(static_cast<Eigen::Index>(pdp.taps()));
        for (std::size_t i = 0; i < pdp.taps(); ++i)
            h[static_cast<Eigen::Index>(i)] = complex_gaussian(rng, pdp.power[i]);
        taps.push_back(std::move(h));
    }
    return {tx, rx, block_length, std::move(taps)};
}

std::vector<CVector> convolve_channel(const std::vector<CVector>& x, const MimoChannel& ch)
{
    if (x.size() != ch.tx())
        throw std::invalid_argument("apply_channel: expected one signal per transmit antenna.");
    const std::size_t D = ch.block_length();
    for (const auto& xt : x)
        if (static_cast<std::size_t>(xt.size()) != D)
            throw std::invalid_argument("apply_channel: signal length does not match the block length.");

    std::vector<CVector> y(ch.rx(), CVector::Zero(static_cast<Eigen::Index>(D)));
    for (std::size_t r = 0; r < ch.rx(); ++r)
        for (std::size_t t = 0; t < ch.tx(); ++t) {
            const CVector& h = ch.taps(r, t);
            for (Eigen::Index i = 0; i < h.size(); ++i) {
                if (h[i] == cd(0.0))
                    continue;
                for (std::size_t n = 0; n < D; ++n)
                    y[r][static_cast<Eigen::Index>(n)] +=
                        h[i] * x[t][static_cast<Eigen::Index>((n + D - static_cast<std::size_t>(i)) % D)];
            }
        }
    return y;
}

std::vector<CVector> apply_channel(const std::vector<CVector>& x, const MimoChannel& ch, double noise_var, Rng& rng)
{
    if (noise_var < 0.0)
        throw std::invalid_argument("apply_channel: noise variance must be nonnegative.");
    std::vector<CVector> y = convolve_channel(x, ch);
    if (noise_var > 0.0)
        for (auto& yr : y)
            for (Eigen::Index n = 0; n < yr.size(); ++n)
                yr[n] += complex_gaussian(rng, noise_var);
    return y;
}

CMatrix build_circulant(const CVector& h, std::size_t block_length)
{
    if (static_cast<std::size_t>(h.size()) > block_length)
        throw std::invalid_argument("build_circulant: more taps than the block length.");
    const auto D = static_cast<Eigen::Index>(block_length);
    CMatrix c = CMatrix::Zero(D, D);
    for (Eigen::Index col = 0; col < D; ++col)
        for (Eigen::Index i = 0; i < h.size(); ++i)
            c((col + i) % D, col) = h[i];
    return c;
}

CMatrix assemble_full_matrix(const MimoChannel& ch, const TransmitterMatrix& a)
{
    const auto D = static_cast<Eigen::Index>(ch.block_length());
    if (a.matrix.rows() != D || a.matrix.cols() != D)
        throw std::invalid_argument("assemble_full_matrix: transmitter matrix does not match the block length.");
    const auto R = static_cast<Eigen::Index>(ch.rx());
    const auto T = static_cast<Eigen::Index>(ch.tx());
    CMatrix full = CMatrix::Zero(R * D, T * D);
    for (Eigen::Index r = 0; r < R; ++r)
        for (Eigen::Index t = 0; t < T; ++t) {
            const CVector& h = ch.taps(static_cast<std::size_t>(r), static_cast<std::size_t>(t));
            auto block = full.block(r * D, t * D, D, D);
            // Row n of H A is sum_i h[i] * row (n - i) of A.
            for (Eigen::Index i = 0; i < h.size(); ++i)
                for (Eigen::Index n = 0; n < D; ++n)
                    block.row(n) += h[i] * a.matrix.row((n - i + D) % D);
        }
    return full;
}

CVector stack(const std::vector<CVector>& parts)
{
    Eigen::Index total = 0;
    for (const auto& p : parts)
        total += p.size();
    CVector out(total);
    Eigen::Index pos = 0;
    for (const auto& p : parts) {
        out.segment(pos, p.size()) = p;
        pos += p.size();
    }
    return out;
}

std::vector<CVector> unstack(const CVector& v, std::size_t count)
{
    if (count == 0 || static_cast<std::size_t>(v.size()) % count != 0)
        throw std::invalid_argument("unstack: length is not a multiple of the part count.");
    const Eigen::Index len = v.size() / static_cast<Eigen::Index>(count);
    std::vector<CVector> parts;
    parts.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        parts.emplace_back(v.segment(static_cast<Eigen::Index>(i) * len, len));
    return parts;
}

} // namespace gfdm
