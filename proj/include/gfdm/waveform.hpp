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

#include <optional>

#include "gfdm/constellation.hpp"
#include "gfdm/types.hpp"

namespace gfdm {

enum class FilterKind
{
    dirichlet,
    raised_cosine,
    custom
};

struct FilterSpec
{
    FilterKind kind = FilterKind::dirichlet;
    double roll_off = 0.0; // raised_cosine only
};

/// Dimensions and alphabet of one GFDM block. Data vectors are indexed
/// m*K + k (subcarrier k fastest).
struct GfdmConfig
{
    std::size_t subcarriers = 1; // K
    std::size_t subsymbols = 1;  // M
    std::size_t cp_length = 1;   // L
    Constellation constellation = Constellation::qpsk();
    FilterSpec filter{};
    double symbol_energy = 1.0; // E_s

    std::size_t block_length() const { return subcarriers * subsymbols; }

    /// Throws std::invalid_argument on K or M == 0, L outside (0, D], or a
    /// constellation whose mean energy is not E_s (1e-12).
    void validate() const;
};

/// Frequency-domain support of an ICI-free filter: g_f equals the length-M
/// window placed at bins shift, shift+1, ... (cyclically), zeros elsewhere.
struct FilterSupport
{
    CVector window;    // g_1
    std::size_t shift; // l, in [0, D)
};

struct PrototypeFilter
{
    std::size_t subcarriers = 0;
    std::size_t subsymbols = 0;
    CVector time; // g, unit energy
    CVector freq; // g_f = sqrt(D) W_D g
    std::optional<FilterSupport> support;

    std::size_t block_length() const { return subcarriers * subsymbols; }

    /// Custom filter from time-domain taps (length D). The taps are scaled to
    /// unit energy and the ICI-free support is detected automatically.
    static PrototypeFilter from_time_domain(std::size_t K, std::size_t M, const CVector& g);

    /// Custom filter from frequency-domain samples (length D), scaled so that ||g|| = 1.
    static PrototypeFilter from_frequency_domain(std::size_t K, std::size_t M, const CVector& g_f);
};

/// Shift of the Dirichlet window, D - ceil(-M/2) reduced modulo D.
std::size_t dirichlet_shift(std::size_t K, std::size_t M);

/// Flat M-bin rectangle in frequency, sqrt(D/M) per bin.
PrototypeFilter dirichlet_filter(const GfdmConfig& cfg);

/// Frequency-domain raised cosine with roll-off `alpha`. Bin i sits at the
/// cyclic offset o = i - c from the integer centre bin c = l + floor(M/2)
/// (l the Dirichlet shift) and gets, with x = |o| / M,
///   1                                            for x <= (1-alpha)/2
///   (1 + cos(pi/alpha * (x - (1-alpha)/2))) / 2  for (1-alpha)/2 < x <= (1+alpha)/2
///   0                                            otherwise,
/// so it spans at most (1+alpha)M <= 2M bins and is symmetric about c like
/// the classic time-symmetric GFDM pulse (its A is singular for even M and
/// alpha > 0). At alpha = 0 the edge x = 1/2 is taken half-open,
/// o in [-M/2, M/2), which reproduces the Dirichlet window exactly.
/// Throws std::invalid_argument if alpha is outside [0, 1].
PrototypeFilter rc_filter(const GfdmConfig& cfg, double alpha);

/// Builds the filter named by cfg.filter (custom filters have no recipe and throw).
PrototypeFilter make_filter(const GfdmConfig& cfg);

inline constexpr double default_support_tolerance = 1e-12;

/// Finds a cyclic window of M bins holding at least (1 - tol) of the filter
/// energy with every outside bin at most sqrt(tol) * ||g_f||. The window with
/// the largest energy wins; ties go to the smallest start.
std::optional<FilterSupport> ici_free_support(const PrototypeFilter& f, double tol = default_support_tolerance);

/// Highest-energy M-bin window without any acceptance threshold. For filters
/// outside the ICI-free class this is the truncation used by diagnostics.
FilterSupport dominant_window(const PrototypeFilter& f);

/// D x D modulation matrix A with column m*K + k equal to g_{k,m}.
struct TransmitterMatrix
{
    CMatrix matrix;
};

TransmitterMatrix build_transmitter_matrix(const GfdmConfig& cfg, const PrototypeFilter& f);

/// Dense product A d.
CVector modulate(const CVector& d, const TransmitterMatrix& a);

/// A d in O(D log D) for ICI-free filters: one M-point DFT per subcarrier,
/// the window weighting, and a single inverse D-point DFT.
/// Throws std::invalid_argument if the filter has no support.
CVector fast_modulate(const CVector& d, const PrototypeFilter& f, const GfdmConfig& cfg);

} // namespace gfdm
