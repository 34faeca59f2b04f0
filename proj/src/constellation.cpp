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

#include "gfdm/constellation.hpp"

#include <bit>
#include <cmath>
#include <stdexcept>

namespace gfdm {

Constellation::Constellation(std::string name, std::vector<cd> points)
    : name_(std::move(name)), points_(std::move(points))
{
    if (points_.empty())
        throw std::invalid_argument("Constellation must contain at least one point.");
}

Constellation Constellation::bpsk()
{
    return {"bpsk", {cd(1.0, 0.0), cd(-1.0, 0.0)}};
}

Constellation Constellation::qpsk()
{
    // Gray labelled: bit 0 -> sign of I, bit 1 -> sign of Q.
    const double a = 1.0 / std::sqrt(2.0);
    return {"qpsk", {cd(a, a), cd(-a, a), cd(a, -a), cd(-a, -a)}};
}

Constellation Constellation::qam16()
{
    // Gray mapping per axis: 00 -> -3, 01 -> -1, 11 -> +1, 10 -> +3
    const double levels[4] = {-3.0, -1.0, 3.0, 1.0};
    const double scale = 1.0 / std::sqrt(10.0);
    std::vector<cd> pts;
    pts.reserve(16);
    for (int q = 0; q < 4; ++q)
        for (int i = 0; i < 4; ++i)
            pts.emplace_back(levels[i] * scale, levels[q] * scale);
    return {"16qam", std::move(pts)};
}

Constellation Constellation::by_name(const std::string& name)
{
    if (name == "bpsk")
        return bpsk();
    if (name == "qpsk")
        return qpsk();
    if (name == "16qam")
        return qam16();
    throw std::invalid_argument("Unknown constellation '" + name + "' (expected bpsk, qpsk or 16qam).");
}

std::size_t Constellation::bits_per_symbol() const
{
    return static_cast<std::size_t>(std::bit_width(points_.size()) - 1);
}

double Constellation::energy() const
{
    double e = 0.0;
    for (const auto& p : points_)
        e += std::norm(p);
    return e / static_cast<double>(points_.size());
}

std::size_t Constellation::nearest(cd z) const
{
    std::size_t best = 0;
    double best_d = std::norm(z - points_[0]);
    for (std::size_t i = 1; i < points_.size(); ++i) {
        const double d = std::norm(z - points_[i]);
        if (d < best_d) {
            best_d = d;
            best = i;
        }
    }
    return best;
}

CVector to_symbols(const SymbolIndices& idx, const Constellation& cs)
{
    CVector s(static_cast<Eigen::Index>(idx.size()));
    for (std::size_t i = 0; i < idx.size(); ++i)
        s[static_cast<Eigen::Index>(i)] = cs[idx[i]];
    return s;
}

std::size_t count_symbol_errors(const SymbolIndices& a, const SymbolIndices& b)
{
    if (a.size() != b.size())
        throw std::invalid_argument("count_symbol_errors: size mismatch.");
    std::size_t errors = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        errors += a[i] != b[i];
    return errors;
}

} // namespace gfdm
