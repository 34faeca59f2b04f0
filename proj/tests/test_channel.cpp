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

#include <doctest.h>

#include <cmath>
#include <numbers>

#include "gfdm/channel.hpp"
#include "gfdm/dft.hpp"
#include "oracles.hpp"

using namespace gfdm;

namespace {

GfdmConfig config(std::size_t K, std::size_t M)
{
    GfdmConfig c;
    c.subcarriers = K;
    c.subsymbols = M;
    c.cp_length = std::max<std::size_t>(1, K * M / 8);
    return c;
}

} // namespace

TEST_CASE("exponential PDP")
{
    SUBCASE("four taps decay by 10 dB overall")
    {
        const auto pdp = PdpProfile::exponential(4);
        std::vector<double> raw;
        double sum = 0.0;
        for (int i = 0; i < 4; ++i) {
            raw.push_back(std::pow(10.0, -10.0 * i / 30.0));
            sum += raw.back();
        }
        REQUIRE(pdp.taps() == 4);
        for (std::size_t i = 0; i < 4; ++i)
            CHECK(pdp.power[i] == doctest::Approx(raw[i] / sum).epsilon(1e-12));
    }
    SUBCASE("profiles sum to one")
    {
        for (std::size_t L : {1u, 2u, 5u, 32u}) {
            double s = 0.0;
            for (double p : PdpProfile::exponential(L).power)
                s += p;
            CHECK(s == doctest::Approx(1.0).epsilon(1e-12));
        }
    }
    SUBCASE("a single tap has unit power")
    {
        const auto pdp = PdpProfile::exponential(1);
        REQUIRE(pdp.taps() == 1);
        CHECK(pdp.power[0] == 1.0);
    }
    CHECK_THROWS_AS(PdpProfile::exponential(0), std::invalid_argument);
}

TEST_CASE("flat Rayleigh channel has unit average gain")
{
    Rng rng(99);
    const auto pdp = PdpProfile::exponential(1);
    const int n = 10000;
    double power = 0.0, amplitude = 0.0;
    for (int i = 0; i < n; ++i) {
        const auto ch = generate_channel(1, 1, pdp, 4, rng);
        power += std::norm(ch.taps(0, 0)[0]);
        amplitude += std::abs(ch.taps(0, 0)[0]);
    }
    CHECK(power / n == doctest::Approx(1.0).epsilon(0.03));
    CHECK(amplitude / n == doctest::Approx(std::sqrt(std::numbers::pi) / 2).epsilon(0.03));
}

TEST_CASE("multi-tap channel energy follows the PDP")
{
    Rng rng(7);
    const auto pdp = PdpProfile::exponential(4);
    const int n = 10000;
    std::vector<double> acc(4, 0.0);
    for (int i = 0; i < n; ++i) {
        const auto ch = generate_channel(2, 2, pdp, 16, rng);
        for (std::size_t r = 0; r < 2; ++r)
            for (std::size_t t = 0; t < 2; ++t)
                for (std::size_t k = 0; k < 4; ++k)
                    acc[k] += std::norm(ch.taps(r, t)[Eigen::Index(k)]) / 4.0;
    }
    for (std::size_t k = 0; k < 4; ++k)
        CHECK(acc[k] / n == doctest::Approx(pdp.power[k]).epsilon(0.05));
}

TEST_CASE("channel generation is deterministic for a fixed seed")
{
    const auto pdp = PdpProfile::exponential(3);
    Rng a(42), b(42);
    const auto ca = generate_channel(2, 3, pdp, 12, a);
    const auto cb = generate_channel(2, 3, pdp, 12, b);
    for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t t = 0; t < 2; ++t)
            CHECK(ca.taps(r, t) == cb.taps(r, t));
    CHECK(ca.memory() == 3);
}

TEST_CASE("frequency response is the unnormalized DFT of the taps")
{
    Rng rng(1);
    const auto ch = generate_channel(2, 2, PdpProfile::exponential(3), 8, rng);
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t t = 0; t < 2; ++t) {
            CVector padded = CVector::Zero(8);
            padded.head(3) = ch.taps(r, t);
            CHECK(oracle::rel_error(ch.freq_response(r, t), std::sqrt(8.0) * oracle::dft(8) * padded) < 1e-12);
        }
}

TEST_CASE("circulant construction")
{
    const cd a(1, 2), b(-3, 0.5);
    const CMatrix c = build_circulant((CVector(2) << a, b).finished(), 3);
    CMatrix expected(3, 3);
    expected << a, 0, b, b, a, 0, 0, b, a;
    CHECK(oracle::rel_error(c, expected) < 1e-15);
    CHECK(oracle::rel_error(build_circulant(CVector::Ones(1), 3), oracle::eye(3)) < 1e-15);
    CHECK_THROWS_AS(build_circulant(CVector::Ones(4), 3), std::invalid_argument);

    Rng rng(4);
    const CVector h = oracle::random_vector(3, rng);
    const CMatrix hc = build_circulant(h, 8);
    const CMatrix diag = oracle::dft(8) * hc * oracle::dft(8).adjoint();
    CVector padded = CVector::Zero(8);
    padded.head(3) = h;
    const CVector eig = std::sqrt(8.0) * oracle::dft(8) * padded;
    CHECK(oracle::rel_error(diag, CMatrix(eig.asDiagonal())) < 1e-12);
}

TEST_CASE("identity channel passes the signal through")
{
    Rng rng(2);
    const auto ch = MimoChannel::identity(2, 2, 8);
    std::vector<CVector> x{oracle::random_vector(8, rng), oracle::random_vector(8, rng)};
    const auto y = apply_channel(x, ch, 0.0, rng);
    CHECK(oracle::rel_error(y[0], x[0]) < 1e-15);
    CHECK(oracle::rel_error(y[1], x[1]) < 1e-15);
}

TEST_CASE("noiseless channel output equals the dense circulant sum")
{
    Rng rng(8);
    const auto ch = generate_channel(2, 3, PdpProfile::exponential(4), 16, rng);
    std::vector<CVector> x{oracle::random_vector(16, rng), oracle::random_vector(16, rng)};
    const auto y = apply_channel(x, ch, 0.0, rng);
    REQUIRE(y.size() == 3);
    for (std::size_t r = 0; r < 3; ++r) {
        CVector expected = CVector::Zero(16);
        for (std::size_t t = 0; t < 2; ++t)
            expected += oracle::circulant(ch.taps(r, t), 16) * x[t];
        CHECK(oracle::rel_error(y[r], expected) < 1e-12);
    }
}

TEST_CASE("circular convolution equals CP insertion, linear channel and CP removal")
{
    Rng rng(12);
    const std::size_t D = 16, L = 3;
    const auto ch = generate_channel(1, 1, PdpProfile::exponential(L), D, rng);
    const CVector x = oracle::random_vector(D, rng);
    CVector tx(Eigen::Index(D + L));
    tx.head(L) = x.tail(L);
    tx.tail(D) = x;
    const CVector& h = ch.taps(0, 0);
    CVector rx = CVector::Zero(tx.size());
    for (Eigen::Index n = 0; n < tx.size(); ++n)
        for (Eigen::Index i = 0; i < h.size() && i <= n; ++i)
            rx[n] += h[i] * tx[n - i];
    const CVector expected = rx.tail(D);
    CHECK(oracle::rel_error(convolve_channel({x}, ch)[0], expected) < 1e-12);
}

TEST_CASE("additive noise has the requested variance")
{
    Rng rng(31);
    const auto ch = MimoChannel::identity(1, 2, 4096);
    const std::vector<CVector> x{CVector::Zero(4096)};
    const double n0 = 0.37;
    const auto y = apply_channel(x, ch, n0, rng);
    const double var = (y[0].squaredNorm() + y[1].squaredNorm()) / 8192.0;
    CHECK(var == doctest::Approx(n0).epsilon(0.05));
}

TEST_CASE("apply_channel rejects mismatched inputs")
{
    Rng rng(1);
    const auto ch = MimoChannel::identity(2, 2, 8);
    CHECK_THROWS_AS(apply_channel({CVector::Zero(8)}, ch, 0.0, rng), std::invalid_argument);
    CHECK_THROWS_AS(apply_channel({CVector::Zero(8), CVector::Zero(7)}, ch, 0.0, rng), std::invalid_argument);
}

TEST_CASE("stacked channel matrix")
{
    SUBCASE("single antenna identity channel reduces to A")
    {
        const auto cfg = config(4, 2);
        const auto a = build_transmitter_matrix(cfg, dirichlet_filter(cfg));
        CHECK(oracle::rel_error(assemble_full_matrix(MimoChannel::identity(1, 1, 8), a), a.matrix) < 1e-15);
    }
    SUBCASE("blocks are circulant times A")
    {
        Rng rng(19);
        const auto cfg = config(4, 2);
        const auto a = build_transmitter_matrix(cfg, rc_filter(cfg, 0.5));
        const auto ch = generate_channel(2, 3, PdpProfile::exponential(2), 8, rng);
        const CMatrix full = assemble_full_matrix(ch, a);
        REQUIRE(full.rows() == 24);
        REQUIRE(full.cols() == 16);
        for (std::size_t r = 0; r < 3; ++r)
            for (std::size_t t = 0; t < 2; ++t)
                CHECK(oracle::rel_error(full.block(Eigen::Index(r * 8), Eigen::Index(t * 8), 8, 8),
                                        oracle::circulant(ch.taps(r, t), 8) * a.matrix) < 1e-12);
    }
    SUBCASE("end-to-end chain equals Htilde d")
    {
        Rng rng(29);
        const auto cfg = config(8, 2);
        const auto f = dirichlet_filter(cfg);
        const auto a = build_transmitter_matrix(cfg, f);
        const auto ch = generate_channel(2, 2, PdpProfile::exponential(2), 16, rng);
        const CVector d = oracle::random_vector(32, rng);
        const auto parts = unstack(d, 2);
        const auto y = apply_channel({fast_modulate(parts[0], f, cfg), fast_modulate(parts[1], f, cfg)}, ch, 0.0, rng);
        CHECK(oracle::rel_error(stack(y), assemble_full_matrix(ch, a) * d) < 1e-12);
    }
}

TEST_CASE("stack and unstack are inverse")
{
    Rng rng(3);
    const CVector v = oracle::random_vector(12, rng);
    const auto parts = unstack(v, 3);
    REQUIRE(parts.size() == 3);
    CHECK(parts[1] == v.segment(4, 4));
    CHECK(stack(parts) == v);
    CHECK_THROWS_AS(unstack(v, 5), std::invalid_argument);
}
