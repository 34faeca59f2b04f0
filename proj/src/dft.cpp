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

#include "gfdm/dft.hpp"

#include <cmath>
#include <numbers>

#include <unsupported/Eigen/FFT>

namespace gfdm {

namespace {

// kissfft keeps twiddle tables per size; one engine per thread.
Eigen::FFT<double>& engine()
{
    thread_local Eigen::FFT<double> fft;
    return fft;
}

} // namespace

CVector dft_unnormalized(const CVector& x)
{
    if (x.size() <= 1)
        return x; // kissfft does not handle p = 1
    CVector out(x.size());
    engine().fwd(out, x);
    return out;
}

CVector dft(const CVector& x)
{
    if (x.size() <= 1)
        return x; // kissfft does not handle p = 1
    return dft_unnormalized(x) / std::sqrt(static_cast<double>(x.size()));
}

CVector idft(const CVector& x)
{
    if (x.size() <= 1)
        return x; // kissfft does not handle p = 1
    CVector out(x.size());
    engine().inv(out, x); // scaled by 1/p
    return out * std::sqrt(static_cast<double>(x.size()));
}

CMatrix dft_matrix(std::size_t p)
{
    CMatrix w(p, p);
    const double scale = 1.0 / std::sqrt(static_cast<double>(p));
    for (std::size_t m = 0; m < p; ++m)
        for (std::size_t n = 0; n < p; ++n) {
            const double phase = -2.0 * std::numbers::pi * static_cast<double>((m * n) % p) / static_cast<double>(p);
            w(m, n) = std::polar(scale, phase);
        }
    return w;
}

} // namespace gfdm
