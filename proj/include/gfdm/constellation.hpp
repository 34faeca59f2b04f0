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

#include <string>
#include <vector>

#include "gfdm/types.hpp"

namespace gfdm {

/// Finite symbol alphabet. Points are stored in label order, so the index of
/// a point is also its bit label.
class Constellation
{
  public:
    Constellation(std::string name, std::vector<cd> points);

    static Constellation bpsk();
    static Constellation qpsk();
    static Constellation qam16();

    /// Looks up "bpsk", "qpsk" or "16qam". Throws std::invalid_argument otherwise.
    static Constellation by_name(const std::string& name);

    const std::string& name() const { return name_; }
    const std::vector<cd>& points() const { return points_; }
    std::size_t size() const { return points_.size(); }
    std::size_t bits_per_symbol() const;
    const cd& operator[](std::size_t i) const { return points_[i]; }

    /// Average symbol energy E_s.
    double energy() const;

    /// Index of the closest point; ties go to the lower index.
    std::size_t nearest(cd z) const;

  private:
    std::string name_;
    std::vector<cd> points_;
};

/// Symbol decisions are carried as indices into a constellation.
using SymbolIndices = std::vector<std::size_t>;

CVector to_symbols(const SymbolIndices& idx, const Constellation& cs);

/// Number of positions where a and b differ. Sizes must match.
std::size_t count_symbol_errors(const SymbolIndices& a, const SymbolIndices& b);

} // namespace gfdm
