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

#include "gfdm/dft.hpp"
#include "gfdm/waveform.hpp"
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

CVector qpsk_block(std::size_t n, Rng& rng)
{
    const auto cs = Constellation::qpsk();
    return to_symbols(oracle::random_symbols(n, cs, rng), cs);
}

} // namespace

TEST_CASE("dft matches the dense definition and round-trips")
{
    Rng rng(3);
    for (std::size_t p : {1u, 2u, 3u, 8u, 12u}) {
        const CVector x = oracle::random_vector(p, rng);
        CHECK(oracle::rel_error(dft(x), oracle::dft(p) * x) < 1e-12);
        CHECK(oracle::rel_error(idft(dft(x)), x) < 1e-12);
        CHECK(oracle::rel_error(dft_unnormalized(x), std::sqrt(double(p)) * oracle::dft(p) * x) < 1e-12);
        CHECK(oracle::rel_error(dft_matrix(p), oracle::dft(p)) < 1e-12);
    }
}

TEST_CASE("dirichlet filter worked examples")
{
    SUBCASE("K=2, M=1")
    {
        const auto f = dirichlet_filter(config(2, 1));
        CHECK(std::abs(f.freq[0] - cd(std::sqrt(2.0))) < 1e-12);
        CHECK(std::abs(f.freq[1]) < 1e-12);
        CHECK(std::abs(f.time[0] - cd(1 / std::sqrt(2.0))) < 1e-12);
        CHECK(std::abs(f.time[1] - cd(1 / std::sqrt(2.0))) < 1e-12);
    }
    SUBCASE("K=2, M=2")
    {
        CHECK(dirichlet_shift(2, 2) == 1);
        const auto f = dirichlet_filter(config(2, 2));
        const double s = std::sqrt(2.0);
        const CVector expected = (CVector(4) << 0, s, s, 0).finished();
        CHECK(oracle::rel_error(f.freq, expected) < 1e-12);
        REQUIRE(f.support.has_value());
        CHECK(f.support->shift == 1);
    }
}

TEST_CASE("filters have unit energy and consistent time/frequency samples")
{
    for (auto [K, M] : {std::pair<std::size_t, std::size_t>{2, 2}, {4, 4}, {8, 2}, {3, 5}}) {
        const auto cfg = config(K, M);
        for (const auto& f : {dirichlet_filter(cfg), rc_filter(cfg, 0.5), rc_filter(cfg, 0.9)}) {
            CHECK(f.time.norm() == doctest::Approx(1.0).epsilon(1e-12));
            const CVector gf = std::sqrt(double(K * M)) * oracle::dft(K * M) * f.time;
            CHECK(oracle::rel_error(f.freq, gf) < 1e-12);
        }
    }
}

TEST_CASE("M=1 turns the transmitter into the inverse DFT")
{
    for (std::size_t K : {1u, 2u, 4u, 8u}) {
        const auto cfg = config(K, 1);
        const auto a = build_transmitter_matrix(cfg, dirichlet_filter(cfg));
        CHECK(oracle::rel_error(a.matrix, oracle::dft(K).adjoint()) < 1e-12);
    }
}

TEST_CASE("transmitter columns follow the shifted-modulated-pulse definition")
{
    const auto cfg = config(4, 3);
    const auto f = rc_filter(cfg, 0.5);
    const auto a = build_transmitter_matrix(cfg, f);
    const std::size_t K = 4, M = 3, D = 12;
    for (std::size_t m = 0; m < M; ++m)
        for (std::size_t k = 0; k < K; ++k)
            for (std::size_t n = 0; n < D; ++n) {
                const cd expected = f.time[static_cast<Eigen::Index>((n + D - m * K) % D)] *
                                    std::exp(cd(0, 2 * std::numbers::pi * double(k * n) / double(K)));
                CHECK(std::abs(a.matrix(Eigen::Index(n), Eigen::Index(m * K + k)) - expected) < 1e-12);
            }
    for (Eigen::Index c = 0; c < a.matrix.cols(); ++c)
        CHECK(a.matrix.col(c).norm() == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("dirichlet transmitter is unitary and preserves energy")
{
    Rng rng(11);
    for (auto [K, M] : {std::pair<std::size_t, std::size_t>{2, 2}, {4, 4}, {8, 2}, {4, 3}}) {
        const auto cfg = config(K, M);
        const auto a = build_transmitter_matrix(cfg, dirichlet_filter(cfg));
        CHECK((a.matrix.adjoint() * a.matrix - oracle::eye(K * M)).norm() < 1e-10);
        const CVector d = qpsk_block(K * M, rng);
        CHECK(modulate(d, a).squaredNorm() == doctest::Approx(d.squaredNorm()).epsilon(1e-10));
    }
}

TEST_CASE("modulate basics")
{
    const auto cfg = config(4, 2);
    const auto a = build_transmitter_matrix(cfg, dirichlet_filter(cfg));
    CVector e0 = CVector::Zero(8);
    e0[0] = 1.0;
    CHECK(oracle::rel_error(modulate(e0, a), a.matrix.col(0)) < 1e-15);
    CHECK(modulate(CVector::Zero(8), a).norm() == 0.0);
    CHECK_THROWS_AS(modulate(CVector::Zero(7), a), std::invalid_argument);
}

TEST_CASE("ICI-free support detection")
{
    SUBCASE("dirichlet windows are recovered")
    {
        for (std::size_t K : {2u, 4u, 8u})
            for (std::size_t M : {1u, 2u, 3u, 4u}) {
                const auto cfg = config(K, M);
                const auto f = dirichlet_filter(cfg);
                const auto s = ici_free_support(f);
                REQUIRE(s.has_value());
                CHECK(s->shift == dirichlet_shift(K, M));
                CHECK(s->window.size() == Eigen::Index(M));
                for (Eigen::Index j = 0; j < s->window.size(); ++j)
                    CHECK(std::abs(s->window[j] - cd(std::sqrt(double(K)))) < 1e-12);
            }
    }
    SUBCASE("raised cosine with alpha 0.9 is not ICI-free")
    {
        for (auto [K, M] : {std::pair<std::size_t, std::size_t>{4, 2}, {8, 2}, {4, 4}, {8, 3}})
            CHECK_FALSE(ici_free_support(rc_filter(config(K, M), 0.9)).has_value());
    }
    SUBCASE("raised cosine with alpha 0 reduces to the dirichlet window")
    {
        for (auto [K, M] : {std::pair<std::size_t, std::size_t>{4, 2}, {8, 2}, {4, 4}, {8, 3}}) {
            const auto cfg = config(K, M);
            const auto rc = rc_filter(cfg, 0.0);
            CHECK(oracle::rel_error(rc.freq, dirichlet_filter(cfg).freq) < 1e-12);
            REQUIRE(rc.support.has_value());
        }
    }
    SUBCASE("a flat spectrum over all D bins has no support")
    {
        const auto f = PrototypeFilter::from_frequency_domain(4, 2, CVector::Ones(8));
        CHECK_FALSE(f.support.has_value());
    }
    SUBCASE("a custom window with zero outside M bins is found")
    {
        CVector gf = CVector::Zero(8);
        gf[6] = cd(1, 1);
        gf[7] = 2.0;
        const auto f = PrototypeFilter::from_frequency_domain(4, 2, gf);
        REQUIRE(f.support.has_value());
        CHECK(f.support->shift == 6);
    }
}

TEST_CASE("raised cosine rejects roll-off outside [0, 1]")
{
    CHECK_THROWS_AS(rc_filter(config(4, 2), -0.1), std::invalid_argument);
    CHECK_THROWS_AS(rc_filter(config(4, 2), 1.5), std::invalid_argument);
}

TEST_CASE("fast modulation equals the dense product")
{
    Rng rng(5);
    for (auto [K, M] : {std::pair<std::size_t, std::size_t>{2, 2}, {4, 4}, {8, 2}, {4, 3}, {1, 4}}) {
        const auto cfg = config(K, M);
        const auto f = dirichlet_filter(cfg);
        const auto a = build_transmitter_matrix(cfg, f);
        for (int trial = 0; trial < 20; ++trial) {
            const CVector d = qpsk_block(K * M, rng);
            CHECK(oracle::rel_error(fast_modulate(d, f, cfg), a.matrix * d) < 1e-10);
        }
        CHECK(fast_modulate(CVector::Zero(Eigen::Index(K * M)), f, cfg).norm() == 0.0);
    }
}

TEST_CASE("fast modulation holds for random ICI-free filters")
{
    Rng rng(17);
    std::uniform_int_distribution<std::size_t> dim(1, 6);
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t K = dim(rng) + 1, M = dim(rng);
        const std::size_t D = K * M;
        std::uniform_int_distribution<std::size_t> start(0, D - 1);
        const std::size_t l = start(rng);
        CVector gf = CVector::Zero(Eigen::Index(D));
        for (std::size_t j = 0; j < M; ++j)
            gf[Eigen::Index((l + j) % D)] = complex_gaussian(rng, 1.0) + cd(3.0, 0.0);
        const auto f = PrototypeFilter::from_frequency_domain(K, M, gf);
        REQUIRE(f.support.has_value());
        const auto cfg = config(K, M);
        const CVector d = oracle::random_vector(D, rng);
        CHECK(oracle::rel_error(fast_modulate(d, f, cfg), build_transmitter_matrix(cfg, f).matrix * d) < 1e-10);
    }
}

TEST_CASE("fast modulation with M=1 is the inverse DFT")
{
    Rng rng(23);
    const auto cfg = config(8, 1);
    const CVector d = qpsk_block(8, rng);
    CHECK(oracle::rel_error(fast_modulate(d, dirichlet_filter(cfg), cfg), oracle::dft(8).adjoint() * d) < 1e-12);
}

TEST_CASE("fast modulation without support throws")
{
    const auto cfg = config(4, 2);
    CHECK_THROWS_AS(fast_modulate(CVector::Zero(8), rc_filter(cfg, 0.9), cfg), std::invalid_argument);
}

TEST_CASE("config validation")
{
    auto cfg = config(4, 2);
    CHECK_NOTHROW(cfg.validate());
    cfg.subcarriers = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = config(4, 2);
    cfg.cp_length = 9;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.cp_length = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg = config(4, 2);
    cfg.symbol_energy = 2.0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("custom time-domain filter is normalized")
{
    CVector g = CVector::Zero(8);
    g[0] = 3.0;
    const auto f = PrototypeFilter::from_time_domain(4, 2, g);
    CHECK(f.time.norm() == doctest::Approx(1.0));
    CHECK_FALSE(f.support.has_value());
    CHECK_THROWS_AS(PrototypeFilter::from_time_domain(4, 2, CVector::Zero(8)), std::invalid_argument);
    CHECK_THROWS_AS(PrototypeFilter::from_time_domain(4, 2, CVector::Ones(7)), std::invalid_argument);
}
