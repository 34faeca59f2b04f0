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

#include "gfdm/permutation.hpp"

#include <stdexcept>
#include <string>

namespace gfdm {

std::size_t wrap_index(std::int64_t i, std::size_t n)
{
    const auto sn = static_cast<std::int64_t>(n);
    const std::int64_t r = i % sn;
    return static_cast<std::size_t>(r < 0 ? r + sn : r);
}

Permutation::Permutation(std::vector<std::size_t> source) : source_(std::move(source))
{
    std::vector<bool> seen(source_.size(), false);
    for (std::size_t s : source_) {
        if (s >= source_.size() || seen[s])
            throw std::invalid_argument("Permutation: index map is not a bijection.");
        seen[s] = true;
    }
}

Permutation Permutation::identity(std::size_t n)
{
    std::vector<std::size_t> src(n);
    for (std::size_t i = 0; i < n; ++i)
        src[i] = i;
    return Permutation(std::move(src));
}

Permutation Permutation::cyclic_shift(std::size_t n, std::int64_t power)
{
    std::vector<std::size_t> src(n);
    for (std::size_t i = 0; i < n; ++i)
        src[i] = wrap_index(static_cast<std::int64_t>(i) - power, n);
    return Permutation(std::move(src));
}

Permutation Permutation::interleave(std::size_t a, std::size_t b)
{
    std::vector<std::size_t> src(a * b);
    for (std::size_t m = 0; m < a; ++m)
        for (std::size_t p = 0; p < b; ++p)
            src[m * b + p] = p * a + m;
    return Permutation(std::move(src));
}

Permutation Permutation::block_repeat(std::size_t copies, const Permutation& p)
{
    const std::size_t n = p.size();
    std::vector<std::size_t> src(copies * n);
    for (std::size_t c = 0; c < copies; ++c)
        for (std::size_t i = 0; i < n; ++i)
            src[c * n + i] = c * n + p.source_[i];
    return Permutation(std::move(src));
}

Permutation Permutation::kron_identity(std::size_t n) const
{
    std::vector<std::size_t> src(size() * n);
    for (std::size_t i = 0; i < size(); ++i)
        for (std::size_t j = 0; j < n; ++j)
            src[i * n + j] = source_[i] * n + j;
    return Permutation(std::move(src));
}

Permutation Permutation::compose(const Permutation& outer, const Permutation& inner)
{
    if (outer.size() != inner.size())
        throw std::invalid_argument("Permutation::compose: size mismatch.");
    std::vector<std::size_t> src(outer.size());
    for (std::size_t i = 0; i < src.size(); ++i)
        src[i] = inner.source_[outer.source_[i]];
    return Permutation(std::move(src));
}

Permutation Permutation::inverse() const
{
    std::vector<std::size_t> src(size());
    for (std::size_t i = 0; i < size(); ++i)
        src[source_[i]] = i;
    return Permutation(std::move(src));
}

void Permutation::check_length(std::size_t n) const
{
    if (n != source_.size())
        throw std::invalid_argument("Permutation: vector length " + std::to_string(n) + " does not match size " +
                                    std::to_string(source_.size()) + ".");
}

CVector Permutation::apply(const CVector& v) const
{
    check_length(static_cast<std::size_t>(v.size()));
    CVector out(v.size());
    for (std::size_t i = 0; i < source_.size(); ++i)
        out[static_cast<Eigen::Index>(i)] = v[static_cast<Eigen::Index>(source_[i])];
    return out;
}

CMatrix Permutation::to_dense() const
{
    const auto n = static_cast<Eigen::Index>(size());
    CMatrix m = CMatrix::Zero(n, n);
    for (std::size_t i = 0; i < size(); ++i)
        m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(source_[i])) = 1.0;
    return m;
}

} // namespace gfdm
