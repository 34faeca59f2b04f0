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
#include <vector>

#include "gfdm/types.hpp"

namespace gfdm {

/// Permutation stored as an index map: applying it to v yields
/// out[i] = v[source(i)]. The dense matrix has a one at (i, source(i)).
class Permutation
{
  public:
    /// Throws std::invalid_argument unless `source` is a bijection on [0, n).
    explicit Permutation(std::vector<std::size_t> source);

    static Permutation identity(std::size_t n);

    /// Pi_n^power: cyclic down-shift by `power` (negative shifts up).
    /// The exponent is reduced modulo n.
    static Permutation cyclic_shift(std::size_t n, std::int64_t power);

    /// Pi_{AB} with [Pi_{AB}]_{mB+p, qA+n} = delta_{mn} delta_{pq}:
    /// reads a vector indexed p*A + m and writes it indexed m*B + p.
    static Permutation interleave(std::size_t a, std::size_t b);

    /// I_copies (x) p.
    static Permutation block_repeat(std::size_t copies, const Permutation& p);

    /// this (x) I_n.
    Permutation kron_identity(std::size_t n) const;

    /// Matrix product outer * inner (inner is applied first).
    static Permutation compose(const Permutation& outer, const Permutation& inner);

    Permutation inverse() const;

    std::size_t size() const { return source_.size(); }
    std::size_t source(std::size_t i) const { return source_[i]; }

    CVector apply(const CVector& v) const;

    template <typename T>
    std::vector<T> apply(const std::vector<T>& v) const
    {
        check_length(v.size());
        std::vector<T> out(v.size());
        for (std::size_t i = 0; i < source_.size(); ++i)
            out[i] = v[source_[i]];
        return out;
    }

    CMatrix to_dense() const;

    bool operator==(const Permutation&) const = default;

  private:
    void check_length(std::size_t n) const;

    std::vector<std::size_t> source_;
};

inline CVector apply_perm(const Permutation& p, const CVector& v) { return p.apply(v); }

/// Reduces a possibly negative shift into [0, n).
std::size_t wrap_index(std::int64_t i, std::size_t n);

} // namespace gfdm
