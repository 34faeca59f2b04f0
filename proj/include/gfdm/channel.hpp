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

#include <vector>

#include "gfdm/types.hpp"
#include "gfdm/waveform.hpp"

namespace gfdm {

/// Average tap powers of a channel impulse response.
struct PdpProfile
{
    std::vector<double> power; // linear, sums to 1

    std::size_t taps() const { return power.size(); }

    /// Linear-in-dB ramp from 0 dB at tap 0 to -decay_db at tap L-1,
    /// normalized to unit total power. L = 1 yields a single unit tap.
    static PdpProfile exponential(std::size_t taps, double decay_db = 10.0);
};

/// T x R frequency-selective MIMO channel over blocks of D samples.
class MimoChannel
{
  public:
    /// taps are stored receive-major: index r*T + t.
    MimoChannel(std::size_t tx, std::size_t rx, std::size_t block_length, std::vector<CVector> taps);

    std::size_t tx() const { return tx_; }
    std::size_t rx() const { return rx_; }
    std::size_t block_length() const { return block_length_; }
    /// Longest impulse response, in taps.
    std::size_t memory() const { return memory_; }

    const CVector& taps(std::size_t r, std::size_t t) const { return taps_[r * tx_ + t]; }

    /// h_f^{(r,t)}: unnormalized D-point DFT of the zero-padded taps, i.e. the
    /// eigenvalues of the circulant H_{r,t}.
    const CVector& freq_response(std::size_t r, std::size_t t) const { return freq_[r * tx_ + t]; }

    /// Flat channel with h = e_0 on r == t pairs and zero elsewhere.
    static MimoChannel identity(std::size_t tx, std::size_t rx, std::size_t block_length);

  private:
    std::size_t tx_;
    std::size_t rx_;
    std::size_t block_length_;
    std::size_t memory_ = 0;
    std::vector<CVector> taps_;
    std::vector<CVector> freq_;
};

/// Independent Rayleigh taps: tap i of every antenna pair is CN(0, pdp.power[i]).
MimoChannel generate_channel(std::size_t tx, std::size_t rx, const PdpProfile& pdp, std::size_t block_length,
                             Rng& rng);

/// y_r = sum_t h^{(r,t)} (*) x_t + n_r, circular convolution over D samples
/// (what remains after CP insertion, the linear channel and CP removal), with
/// n_r ~ CN(0, N0 I_D). No noise is drawn when noise_var == 0.
std::vector<CVector> apply_channel(const std::vector<CVector>& x, const MimoChannel& ch, double noise_var, Rng& rng);

/// Noiseless part of apply_channel.
std::vector<CVector> convolve_channel(const std::vector<CVector>& x, const MimoChannel& ch);

/// D x D circulant whose first column is the zero-padded h.
CMatrix build_circulant(const CVector& h, std::size_t block_length);

/// The RD x TD matrix whose (r, t) block is H_{r,t} A.
CMatrix assemble_full_matrix(const MimoChannel& ch, const TransmitterMatrix& a);

/// Stacks per-antenna vectors into one vector (antenna-major).
CVector stack(const std::vector<CVector>& parts);

/// Splits an antenna-major vector into `count` equal parts.
std::vector<CVector> unstack(const CVector& v, std::size_t count);

} // namespace gfdm
