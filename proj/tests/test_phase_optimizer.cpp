// SPDX-License-Identifier: Apache-2.0
//
// ris-ntn-sim: RIS-assisted non-terrestrial downlink simulator
// Copyright (C) 2026 The ris-ntn-sim authors
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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <numbers>

#include "risntn/channel_model.hpp"
#include "risntn/phase_optimizer.hpp"
#include "test_support.hpp"

using namespace risntn;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace
{
    const cx I{0.0, 1.0};
    constexpr double two_pi = 2.0 * std::numbers::pi;

    ChannelSet make(std::initializer_list<cx> g, std::initializer_list<cx> h, cx h_d)
    {
        return ChannelSet{arma::cx_vec(std::vector<cx>(h)), arma::cx_vec(std::vector<cx>(g)), h_d};
    }
}

TEST_CASE("optimize_sc - aligns every term with the direct link")
{
    const auto r = optimize_sc(make({1.0, I}, {1.0, 1.0}, 1.0));
    CHECK_THAT(r.objective, WithinAbs(3.0, 1e-14));
    CHECK(std::abs(r.phi.matrix()(0, 0) - cx(1.0, 0.0)) < 1e-15);
    CHECK(std::abs(r.phi.matrix()(1, 1) - (-I)) < 1e-15);
    CHECK(r.architecture == Architecture::single_connected());
    CHECK_FALSE(r.degenerate);
}

TEST_CASE("optimize_sc - single element without direct link")
{
    const double a = 0.7, b = 1.9;
    const auto r = optimize_sc(make({std::polar(a, 0.3)}, {std::polar(b, -2.1)}, 0.0));
    CHECK_THAT(r.objective, WithinRel(a * b, 1e-14));
}

TEST_CASE("optimize_sc - closed form vs grid search")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed)
    {
        const ChannelSet ch = test::gaussian_channel(seed, 3);
        const double closed = optimize_sc(ch).objective;
        const double grid = brute_force_sc(ch, 256).objective;
        CHECK(closed >= grid);
        CHECK(closed <= grid + two_pi / 256.0 * closed);
        CHECK_THAT(closed, WithinRel(test::sc_bound(ch), 1e-12));
    }
}

TEST_CASE("optimize_fc - disjoint supports")
{
    const auto ch = make({1.0, 0.0}, {0.0, 1.0}, 0.0);
    CHECK_THAT(optimize_fc(ch).objective, WithinAbs(1.0, 1e-14));
    CHECK_THAT(optimize_sc(ch).objective, WithinAbs(0.0, 1e-14));
}

TEST_CASE("optimize_fc - equals optimize_sc under proportional magnitudes")
{
    // |g_m| |h_m| proportional to |g_m|^2: Cauchy-Schwarz is tight
    const double s = 1.0 / std::sqrt(2.0);
    const auto ch = make({std::polar(s, 0.4), std::polar(s, -1.2)}, {std::polar(s, 2.0), std::polar(s, 0.1)}, 0.0);
    CHECK_THAT(optimize_fc(ch).objective, WithinRel(optimize_sc(ch).objective, 1e-12));
}

TEST_CASE("optimize_fc - closed form vs U(2) grid search")
{
    for (std::uint64_t seed = 0; seed < 5; ++seed)
    {
        const ChannelSet ch = test::gaussian_channel(100 + seed, 2);
        const double closed = optimize_fc(ch).objective;
        const auto grid = brute_force_fc2(ch, 32);
        CHECK(grid.objective <= closed + 1e-9);
        CHECK(grid.objective >= 0.99 * closed);
        CHECK_NOTHROW(validate(grid.phi));
    }
}

TEST_CASE("optimize_fc - zero channel is degenerate")
{
    const auto r = optimize_fc(make({0.0, 0.0}, {1.0, I}, std::polar(0.3, 1.0)));
    CHECK(r.degenerate);
    CHECK(arma::approx_equal(r.phi.matrix(), arma::eye<arma::cx_mat>(2, 2), "absdiff", 0.0));
    CHECK_THAT(r.objective, WithinAbs(0.3, 1e-15));
}

TEST_CASE("optimize_gc - limits and sandwich")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed)
    {
        const ChannelSet ch = test::gaussian_channel(200 + seed, 4);
        const auto sc = optimize_sc(ch);
        const auto fc = optimize_fc(ch);

        const auto gc_m = optimize_gc(ch, 4);
        CHECK_THAT(gc_m.objective, WithinRel(sc.objective, 1e-12));
        CHECK(arma::abs(gc_m.phi.matrix() - sc.phi.matrix()).max() < 1e-12);

        const auto gc_1 = optimize_gc(ch, 1);
        CHECK_THAT(gc_1.objective, WithinRel(fc.objective, 1e-12));

        const auto gc_2 = optimize_gc(ch, 2);
        CHECK(sc.objective <= gc_2.objective + 1e-12);
        CHECK(gc_2.objective <= fc.objective + 1e-12);
        CHECK_THAT(gc_2.objective, WithinRel(test::gc_bound(ch, 2), 1e-12));
        CHECK(gc_2.architecture == Architecture::group_connected(2));
    }
}

TEST_CASE("optimize_gc - group count must divide M")
{
    try
    {
        optimize_gc(test::gaussian_channel(1, 6), 4);
        FAIL("expected DimensionMismatch");
    }
    catch (const Error &e)
    {
        CHECK(e.kind() == ErrorKind::DimensionMismatch);
    }
}

TEST_CASE("brute_force_sc - oracle behaviour")
{
    CHECK_THAT(brute_force_sc(make({1.0}, {1.0}, 0.0), 4).objective, WithinAbs(1.0, 1e-15));

    for (std::uint64_t seed = 0; seed < 10; ++seed)
    {
        const auto ch2 = test::gaussian_channel(300 + seed, 2);
        const double closed2 = optimize_sc(ch2).objective;
        const double grid2 = brute_force_sc(ch2, 64).objective;
        CHECK(grid2 <= closed2);
        CHECK(closed2 - grid2 <= 2.0 * (two_pi / 64.0) * closed2);

        const auto ch3 = test::gaussian_channel(400 + seed, 3);
        CHECK(brute_force_sc(ch3, 32).objective <= optimize_sc(ch3).objective + 1e-12);
    }

    try
    {
        brute_force_sc(test::gaussian_channel(1, 5), 8);
        FAIL("expected TooLarge");
    }
    catch (const Error &e)
    {
        CHECK(e.kind() == ErrorKind::TooLarge);
    }
    CHECK_THROWS_AS(brute_force_sc(test::gaussian_channel(1, 2), 3), Error);
}

TEST_CASE("brute_force_fc2 - oracle behaviour")
{
    CHECK(brute_force_fc2(make({1.0, 0.0}, {0.0, 1.0}, 0.0), 32).objective >= 0.995);
    CHECK(brute_force_fc2(make({1.0, 0.0}, {1.0, 0.0}, 0.0), 32).objective >= 0.995);
    for (std::uint64_t seed = 0; seed < 5; ++seed)
    {
        const auto ch = test::gaussian_channel(500 + seed, 2);
        CHECK(brute_force_fc2(ch, 16).objective <= optimize_fc(ch).objective + 1e-9);
    }
    try
    {
        brute_force_fc2(test::gaussian_channel(1, 3), 8);
        FAIL("expected WrongDimension");
    }
    catch (const Error &e)
    {
        CHECK(e.kind() == ErrorKind::WrongDimension);
    }
}

TEST_CASE("unitary_with_first_column - orthonormal completion")
{
    for (std::uint64_t seed = 0; seed < 20; ++seed)
    {
        std::mt19937_64 rng(seed);
        arma::cx_vec x = test::gaussian_vector(rng, 1 + seed % 9);
        if (seed % 4 == 0)
            x(0) = 0.0; // exercises the zero-pivot branch
        x /= arma::norm(x);
        const arma::cx_mat q = unitary_with_first_column(x);
        CHECK(test::unitarity_residual(q) < 1e-14);
        CHECK(arma::abs(q.col(0) - x).max() < 1e-15);
    }
}

TEST_CASE("optimizers - properties over random channels")
{
    for (std::uint64_t seed = 0; seed < 200; ++seed)
    {
        const std::size_t m = 1 + seed % 24;
        ChannelSet ch = test::gaussian_channel(seed, m);
        if (seed % 7 == 0)
            ch.h_d = 0.0;

        const auto sc = optimize_sc(ch);
        const auto fc = optimize_fc(ch);

        // optimality certificates against effective_channel recomputation
        CHECK_THAT(sc.objective, WithinRel(test::sc_bound(ch), 1e-9));
        CHECK_THAT(fc.objective, WithinRel(test::fc_bound(ch), 1e-9));
        CHECK_THAT(std::abs(effective_channel(sc.phi, ch)), WithinRel(sc.objective, 1e-9));
        CHECK_THAT(std::abs(effective_channel(fc.phi, ch)), WithinRel(fc.objective, 1e-9));
        CHECK_NOTHROW(validate(sc.phi));
        CHECK_NOTHROW(validate(fc.phi));

        for (std::size_t u = 1; u <= m; ++u)
        {
            if (m % u)
                continue;
            const auto gc = optimize_gc(ch, u);
            CHECK(sc.objective <= gc.objective + 1e-9);
            CHECK(gc.objective <= fc.objective + 1e-9);
            CHECK_NOTHROW(validate(gc.phi));
        }

        // global unit-modulus rotations of g and h change no objective
        ChannelSet rotated = ch;
        rotated.g *= std::polar(1.0, 0.37 * double(seed));
        rotated.h *= std::polar(1.0, -1.3 * double(seed));
        CHECK_THAT(optimize_sc(rotated).objective, WithinAbs(sc.objective, 1e-12));
        CHECK_THAT(optimize_fc(rotated).objective, WithinAbs(fc.objective, 1e-12));
    }
}

TEST_CASE("optimize_sc - monotone in M under pure LOS")
{
    const auto geom = build_geometry(600e3, 15e3, 18.7e9);
    const auto full = generate_channels(geom, FadingSpec::pure_los(FadingSpec::LosPhase::IidUniform), 64, 11);
    double prev = 0.0;
    for (std::size_t m = 1; m <= 64; ++m)
    {
        const ChannelSet ch{full.h.head(m), full.g.head(m), full.h_d};
        const double obj = optimize_sc(ch).objective;
        CHECK(obj >= prev);
        prev = obj;
    }
}
