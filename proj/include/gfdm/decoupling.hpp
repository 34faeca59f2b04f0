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

#include "gfdm/channel.hpp"
#include "gfdm/permutation.hpp"
#include "gfdm/waveform.hpp"

namespace gfdm {

/// Per-subcarrier MIMO blocks of an ICI-free MIMO-GFDM link.
///
/// With U = (Pi_{KR} (x) I_M)(I_R (x) Pi_D^{-l} W_D) and
/// P = (Pi_{KT} (x) I_M)(I_T (x) Pi_{KM}) the stacked channel factors as
///   U Htilde = blkdiag(F_0, ..., F_{K-1}) P,
/// where F_k is MR x MT. Row r*M + j of F_k is receive antenna r, bin j of
/// subcarrier k; column t*M + m is subsymbol m of subcarrier k on antenna t.
struct BlockSystem
{
    std::size_t subcarriers = 0;
    std::size_t subsymbols = 0;
    std::size_t tx = 0;
    std::size_t rx = 0;
    std::size_t shift = 0;
    std::vector<CMatrix> blocks;

    CMatrix block_diagonal() const;
};

/// U's interleaving stage, Pi_{KR} (x) I_M.
Permutation receive_interleaver(std::size_t K, std::size_t M, std::size_t R);

/// P = (Pi_{KT} (x) I_M)(I_T (x) Pi_{KM}) as an index map.
Permutation data_permutation_map(std::size_t K, std::size_t M, std::size_t T);

/// ybar = U y for per-antenna received blocks y_r: R unitary D-point DFTs,
/// a cyclic shift up by l, then the subcarrier-major interleave.
CVector receive_transform(const std::vector<CVector>& y, std::size_t shift, std::size_t K, std::size_t M);

/// dbar = P d. Afterwards entries [kMT, (k+1)MT) are the symbols of subcarrier k.
CVector data_permutation(const CVector& d, std::size_t K, std::size_t M, std::size_t T);

/// d = P^T dbar.
CVector inverse_data_permutation(const CVector& dbar, std::size_t K, std::size_t M, std::size_t T);

/// F_k from the analytic per-pair expression
///   E_k^{(r,t)} = K^{-1/2} diag(slice_k(Pi_D^{-l} h_f)) diag(g_1) Pi_M^{-l} W_M.
/// Throws std::invalid_argument when the filter has no ICI-free support.
BlockSystem compute_blocks(const MimoChannel& ch, const PrototypeFilter& f, const GfdmConfig& cfg);

/// Same as above with an explicitly provided window, which need not match the filter.
BlockSystem compute_blocks(const MimoChannel& ch, const FilterSupport& support, const GfdmConfig& cfg);

/// Dense U (RD x RD). Diagnostics only.
CMatrix dense_receive_matrix(std::size_t K, std::size_t M, std::size_t R, std::size_t shift);

/// ||U Htilde - blkdiag(F_k) P||_F / ||Htilde||_F with dense matrices, and 0
/// when Htilde vanishes. Filters outside the ICI-free class are evaluated
/// with their dominant M-bin window, so the residual measures the leakage.
double verify_decomposition(const MimoChannel& ch, const PrototypeFilter& f, const GfdmConfig& cfg);

} // namespace gfdm
