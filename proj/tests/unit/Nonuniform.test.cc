//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/unit/Nonuniform.test.cc
//---------------------------------------------------------------------------//
#include "signedchord/nonuniform/DensityField.hh"

#include <gtest/gtest.h>

#include "signedchord/Error.hh"
#include "signedchord/nonuniform/Optical.hh"

#include "TestUtils.hh"

namespace signedchord
{
namespace test
{
//---------------------------------------------------------------------------//
DensityField ball_field(double rho = 1)
{
    return DensityField(Solid::sphere({0, 0, 0}, 1),
                        {{Solid::sphere({0, 0, 0}, 1), rho}});
}

DensityField layered_field()
{
    return DensityField(Solid::sphere({0, 0, 0}, 1),
                        {{Solid::sphere({0, 0, 0}, 1), 0.5},
                         {Solid::sphere({0, 0, 0}, 0.5), 2}});
}

TEST(DensityFieldTest, later_regions_paint_over_earlier)
{
    auto f = layered_field();
    EXPECT_EQ(2.0, f.density({0.1, 0, 0}));
    EXPECT_EQ(0.5, f.density({0.75, 0, 0}));
    EXPECT_EQ(0.0, f.density({1.5, 0, 0}));

    auto prof = f.profile({{0, 0, -2}, {0, 0, 1}});
    ASSERT_EQ(3u, prof.size());
    EXPECT_NEAR(1.0, prof[0].interval.lo, 1e-12);
    EXPECT_EQ(0.5, prof[0].rho);
    EXPECT_EQ(2.0, prof[1].rho);
    EXPECT_NEAR(2.5, prof[1].interval.hi, 1e-12);
}

TEST(DensityFieldTest, optical_lengths)
{
    auto f = layered_field();
    // Diameter: 0.5 * 0.5 + 2 * 1 + 0.5 * 0.5
    EXPECT_NEAR(2.5, f.optical_length({-1, 0, 0}, {1, 0, 0}), 1e-12);
    EXPECT_NEAR(2.5, f.optical_chord({{-3, 0, 0}, {1, 0, 0}}), 1e-12);
    EXPECT_NEAR(1.0 + 0.25, f.optical_radius({{0, 0, 0}, {0, 1, 0}}), 1e-12);
    EXPECT_NEAR(0.25, f.optical_length({0, 0.5, 0}, {0, 1, 0}), 1e-12);
}

TEST(DensityFieldTest, analytic_mass)
{
    auto m = layered_field().analytic_mass();
    ASSERT_TRUE(m);
    double const big = 4 * pi / 3, small = big / 8;
    EXPECT_NEAR(0.5 * (big - small) + 2 * small, *m, 1e-12);

    // A region painted over entirely contributes nothing
    DensityField hidden(Solid::sphere({0, 0, 0}, 1),
                        {{Solid::sphere({0, 0, 0}, 0.5), 7},
                         {Solid::sphere({0, 0, 0}, 0.9), 1}});
    EXPECT_NEAR(0.729 * big, *hidden.analytic_mass(), 1e-12);

    // Partial overlaps have no closed form here
    DensityField overlap(Solid::sphere({0, 0, 0}, 1),
                         {{Solid::sphere({0.3, 0, 0}, 0.5), 1},
                          {Solid::sphere({-0.3, 0, 0}, 0.5), 2}});
    EXPECT_FALSE(overlap.analytic_mass());
}

TEST(DensityFieldTest, validation)
{
    // Nonconvex hull
    EXPECT_THROW(DensityField(Solid::subtract(Solid::sphere({0, 0, 0}, 1),
                                              Solid::sphere({0, 0, 0}, 0.5)),
                              {}),
                 Error);
    // Negative density
    EXPECT_THROW(DensityField(Solid::sphere({0, 0, 0}, 1),
                              {{Solid::sphere({0, 0, 0}, 1), -1}}),
                 Error);
    // Region outside the hull
    EXPECT_THROW(DensityField(Solid::sphere({0, 0, 0}, 1),
                              {{Solid::sphere({0.5, 0, 0}, 1), 1}}),
                 Error);
    EXPECT_THROW(field_from_string(R"({"hull": {"sphere": {"center": [0,0,0], "radius": 1}}})"),
                 Error);
}

TEST(OpticalTest, uniform_ball_reduces_to_chords)
{
    auto f = ball_field(2.0);
    auto mt = estimate_mu_tilde(f, small_plan(), 100000, {0, 4, 32});
    // Optical chords are twice the geometric chords
    EXPECT_NEAR(8.0 / 3, mt.mean.value, 4 * mt.mean.error);

    auto g = estimate_G(f, small_plan(), 200000);
    // int rho^2 = 4 V, G / int rho^2 = 3 / 4 for the unit ball
    EXPECT_NEAR(0.75, g.normalized.value, 4 * g.normalized.error);
}

TEST(OpticalTest, dirac_identity_and_constants)
{
    auto f = ball_field();
    auto r = dirac_optical(f, TestFunction::parse("exp:1"), small_plan(), 200000);
    EXPECT_NEAR(0, r.difference.value, 4 * r.difference.error);
    EXPECT_NEAR(pi, r.g.value, 4 * r.g.error);
    EXPECT_NEAR(pi, r.c_tilde.value, 4 * r.c_tilde.error);
    EXPECT_TRUE(all_passed(r.checks));

    auto q = uniform_surface_quarter(f);
    ASSERT_TRUE(q);
    EXPECT_NEAR(pi, *q, 1e-12);
    EXPECT_FALSE(uniform_surface_quarter(layered_field()));
}

TEST(OpticalTest, b3_uniform_ball)
{
    B3Options opts;
    opts.pairs = 2'000'000;
    auto r = check_B3(ball_field(), small_plan(), opts);
    EXPECT_FALSE(r.degenerate);
    EXPECT_TRUE(r.mass_analytic);
    EXPECT_NEAR(pi, r.c_dot.value, 4 * r.c_dot.error + 0.02 * pi);
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace signedchord
