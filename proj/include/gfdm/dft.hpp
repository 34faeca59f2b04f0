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

#include "gfdm/types.hpp"

namespace gfdm {

// Unitary DFT conventions: [W_p]_{m,n} = exp(-j 2 pi m n / p) / sqrt(p).

/// Returns W_p * x for p = x.size().
CVector dft(const CVector& x);

/// Returns W_p^H * x for p = x.size().
CVector idft(const CVector& x);

/// Unnormalized DFT, sqrt(p) * W_p * x.
CVector dft_unnormalized(const CVector& x);

/// Dense W_p. Only used by diagnostics and tests.
CMatrix dft_matrix(std::size_t p);

} // namespace gfdm
