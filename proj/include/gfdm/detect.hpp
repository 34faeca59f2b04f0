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
#include <stdexcept>
#include <vector>

#include "gfdm/channel.hpp"
#include "gfdm/constellation.hpp"
#include "gfdm/decoupling.hpp"
#include "gfdm/types.hpp"

namespace gfdm {

class SingularMatrixError : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

/// Sorted QR decomposition F * Perm = Q R.
///
/// Column i of Q R equals column perm[i] of the input. For the MMSE variant
/// Q belongs to the extended matrix [H; sqrt(N0/E_s) I]; only its first
/// `data_rows` rows act on received data.
struct SqrdFactorization
{
    CMatrix q;
    CMatrix r;
    std::vector<std::size_t> perm;
    std::size_t data_rows = 0;

    auto q_data() const { return q.topRows(static_cast<Eigen::Index>(data_rows)); }

    /// Dense column permutation matrix with F * perm_matrix() = Q R.
    CMatrix perm_matrix() const;
};

/// Counters accumulated by the detectors. One CM is one complex
/// multiplication; complex-by-real products count as one CM as well, and
/// squared magnitudes are free.
struct DetectionStats
{
    std::uint64_t sd_nodes = 0; // tree nodes entered by the sphere decoder
    std::uint64_t sd_cm = 0;    // CMs spent inside the sphere decoder
    std::uint64_t sic_cm = 0;   // CMs spent cancelling detected groups

    DetectionStats& operator+=(const DetectionStats& o)
    {
        sd_nodes += o.sd_nodes;
        sd_cm += o.sd_cm;
        sic_cm += o.sic_cm;
        return *this;
    }
};

/// Modified Gram-Schmidt with greedy pivoting: each step takes the remaining
/// column with the smallest residual norm (ties to the lowest original index).
/// Throws SingularMatrixError when a residual norm drops below 1e-12 ||F||_F,
/// and std::invalid_argument when F has fewer rows than columns.
SqrdFactorization sqrd(const CMatrix& f);

/// sqrd of [H; sqrt(N0/E_s) I].
SqrdFactorization mmse_sqrd(const CMatrix& h, double noise_var, double symbol_energy = 1.0);

/// Depth-first sphere decoder with Schnorr-Euchner child ordering.
///
/// Returns argmin_s ||z - R s||^2 over s in cs^n for upper-triangular R. The
/// search starts with an infinite radius at the last coordinate and shrinks
/// the radius at every improved leaf; among leaves of equal metric the first
/// one reached is kept.
SymbolIndices sphere_decode(const CMatrix& r, const CVector& z, const Constellation& cs, DetectionStats& stats);

inline constexpr std::uint64_t default_ml_budget = std::uint64_t{1} << 20;

/// Brute-force argmin ||y - H d||^2 over all |cs|^n candidates. Candidates are
/// visited in lexicographic order of their indices (d[0] most significant),
/// so ties go to the smallest candidate. Throws std::length_error above `budget`.
SymbolIndices exhaustive_ml(const CVector& y, const CMatrix& h, const Constellation& cs,
                            std::uint64_t budget = default_ml_budget);

/// Per-subcarrier ML detection on a decoupled block system. The SQRD of every
/// F_k is computed once at construction and reused for each data block.
class ProposedDetector
{
  public:
    explicit ProposedDetector(BlockSystem system);

    /// ybar = U y. Returns symbol indices in antenna-major order d = [d_1; ...; d_T].
    SymbolIndices detect(const CVector& ybar, const Constellation& cs, DetectionStats& stats) const;

    const BlockSystem& system() const { return system_; }

  private:
    BlockSystem system_;
    std::vector<SqrdFactorization> factors_;
    Permutation data_perm_inverse_;
};

/// Near-ML reference receiver: MMSE-SQRD of the whole stacked channel, then
/// sphere decoding of consecutive groups from the bottom of R with
/// successive cancellation of every decided group.
class BaselineDetector
{
  public:
    BaselineDetector(const CMatrix& htilde, double noise_var, std::size_t group_size, double symbol_energy = 1.0);

    SymbolIndices detect(const CVector& y, const Constellation& cs, DetectionStats& stats) const;

    const SqrdFactorization& factorization() const { return qr_; }

  private:
    SqrdFactorization qr_;
    std::size_t group_size_;
};

/// MIMO-OFDM receiver (A = W_D^H): one R x T problem per subcarrier.
class OfdmDetector
{
  public:
    explicit OfdmDetector(const MimoChannel& ch);

    SymbolIndices detect(const std::vector<CVector>& y, const Constellation& cs, DetectionStats& stats) const;

  private:
    std::size_t tx_;
    std::size_t rx_;
    std::size_t block_length_;
    std::vector<SqrdFactorization> factors_;
};

// One-shot wrappers. noise_var is unused by the proposed and OFDM paths,
// which rely on plain SQRD.

SymbolIndices detect_proposed(const CVector& ybar, const BlockSystem& blocks, const Constellation& cs,
                              double noise_var, DetectionStats& stats);

SymbolIndices detect_baseline_near_ml(const CVector& y, const CMatrix& htilde, const Constellation& cs,
                                      double noise_var, std::size_t group_size, DetectionStats& stats,
                                      double symbol_energy = 1.0);

SymbolIndices detect_ofdm(const std::vector<CVector>& y, const MimoChannel& ch, const Constellation& cs,
                          double noise_var, DetectionStats& stats);

} // namespace gfdm
