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

#include "gfdm/complexity.hpp"

#include <initializer_list>
#include <stdexcept>

namespace gfdm {

namespace {

std::uint64_t mul(std::initializer_list<std::uint64_t> factors)
{
    std::uint64_t out = 1;
    for (std::uint64_t f : factors)
        if (__builtin_mul_overflow(out, f, &out))
            throw std::overflow_error("table1_cm: count exceeds 64 bits.");
    return out;
}

std::uint64_t add(std::initializer_list<std::uint64_t> terms)
{
    std::uint64_t out = 0;
    for (std::uint64_t t : terms)
        if (__builtin_add_overflow(out, t, &out))
            throw std::overflow_error("table1_cm: count exceeds 64 bits.");
    return out;
}

} // namespace

Table1Counts table1_cm(ReceiverFamily family, std::uint64_t K, std::uint64_t M, std::uint64_t T, std::uint64_t R)
{
    if (K == 0 || M == 0 || T == 0 || R == 0)
        throw std::invalid_argument("table1_cm: all dimensions must be positive.");

    switch (family) {
    case ReceiverFamily::ofdm: {
        const std::uint64_t D = mul({K, M});
        const std::uint64_t tail = (mul({D, T, T}) - mul({D, T})) / 2;
        return {add({mul({D, T, T, R}), mul({D, T, R}), tail}), 0};
    }
    case ReceiverFamily::near_ml: {
        const std::uint64_t n = mul({K, M, T}); // 2n^3 + 3n^2 + n = n(n+1)(2n+1), divisible by 6
        const std::uint64_t tail = add({mul({2, n, n, n}), mul({3, n, n}), n}) / 6;
        const std::uint64_t sqrd = add({mul({K, K, K, M, M, M, T, T, R}), mul({K, K, M, M, T, R}), tail});
        return {sqrd, mul({K, K, T, T, M, M})};
    }
    case ReceiverFamily::proposed: {
        const std::uint64_t tail = (mul({K, M, M, T, T}) - mul({K, M, T})) / 2;
        return {add({mul({K, M, M, M, T, T, R}), mul({K, M, M, T, R}), tail}), 0};
    }
    }
    throw std::invalid_argument("table1_cm: unknown receiver family.");
}

} // namespace gfdm
