//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/unit/Decompose.test.cc
//---------------------------------------------------------------------------//
#include "signedchord/estimators/Decompose.hh"

#include <algorithm>
#include <gtest/gtest.h>

#include "signedchord/Error.hh"
#include "signedchord/dirac/TestFunction.hh"
#include "signedchord/sampling/RandomSource.hh"

#include "TestUtils.hh"

namespace signedchord
{
namespace test
{
//---------------------------------------------------------------------------//
TEST(DecomposeTest, chord_pieces_for_two_intervals)
{
    auto d = chord_decompose(IntervalSet::from_sorted({{0, 1}, {3, 4.5}}));
    ASSERT_EQ(6u, d.pieces.size());
    EXPECT_EQ(2u, d.n_intervals);
    EXPECT_DOUBLE_EQ(2.5, d.ocd_length);
    int charge = 0;
    double sq = 0;
    std::vector<std::pair<double, int>> got;
    for (auto const& p : d.pieces)
    {
        charge += p.charge;
        sq += p.charge * p.length * p.length;
        got.emplace_back(p.length, p.charge);
    }
    EXPECT_EQ(2, charge);
    EXPECT_NEAR(2.5 * 2.5, sq, 1e-14);
    std::sort(got.begin(), got.end());
    std::vector<std::pair<double, int>> expected{
        {1, 1}, {1.5, 1}, {2, 1}, {3, -1}, {3.5, -1}, {4.5, 1}};
    EXPECT_EQ(expected, got);
}

TEST(DecomposeTest, square_identity_on_random_sets)
{
    RandomSource rng(11, 0);
    for (int trial = 0; trial < 2000; ++trial)
    {
        auto s = random_intervals(rng, 6);
        auto d = chord_decompose(s);
        double sq = 0;
        int charge = 0;
        for (auto const& p : d.pieces)
        {
            sq += p.charge * p.length * p.length;
            charge += p.charge;
            EXPECT_GT(p.length, 0);
        }
        EXPECT_EQ(static_cast<int>(s.size()), charge);
        EXPECT_NEAR(s.total_length() * s.total_length(), sq,
                    1e-12 * s.total_length() * s.total_length());
    }
}

TEST(DecomposeTest, signed_lambda_matches_pair_quadrature)
{
    struct Kernel
    {
        char const* text;
        std::function<double(double)> f;
    };
    std::vector<Kernel> kernels{{"pow:0", [](double) { return 1.0; }},
                                {"pow:1", [](double x) { return x; }},
                                {"exp:1", [](double x) { return std::exp(-x); }}};
    RandomSource rng(12, 0);
    std::vector<IntervalSet> sets;
    for (int i = 0; i < 500; ++i)
        sets.push_back(random_intervals(rng, 4));

    for (auto const& k : kernels)
    {
        TestFunction const phi = TestFunction::parse(k.text);
        double worst = 0;
        for (auto const& s : sets)
        {
            double sum = 0;
            for (auto const& p : chord_decompose(s).pieces)
                sum += p.charge * phi.lambda(p.length);
            double const ref = pair_integral(s, k.f);
            worst = std::max(worst, std::fabs(sum - ref) / std::fabs(ref));
        }
        EXPECT_LT(worst, 1e-6) << k.text;
    }
}

TEST(DecomposeTest, radii)
{
    auto d = radii_decompose(IntervalSet::from_sorted({{0, 0.25}, {1.25, 1.75}}));
    ASSERT_EQ(3u, d.radii.size());
    EXPECT_EQ(0.25, d.first_radius());
    EXPECT_EQ(-1, d.radii[1].sign);
    EXPECT_EQ(1.25, d.radii[1].radius);
    EXPECT_EQ(1, d.radii[2].sign);
    EXPECT_DOUBLE_EQ(0.75, d.osd_length);
    double sum = 0;
    for (auto const& r : d.radii)
        sum += r.sign * r.radius;
    EXPECT_DOUBLE_EQ(d.osd_length, sum);

    try
    {
        radii_decompose(IntervalSet::from_sorted({{0.5, 1}}));
        FAIL();
    }
    catch (Error const& e)
    {
        EXPECT_EQ(ErrorCode::empty_intersection, e.code());
    }
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace signedchord
