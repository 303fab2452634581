//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/unit/Estimators.test.cc
//---------------------------------------------------------------------------//
#include "signedchord/estimators/Estimators.hh"

#include <gtest/gtest.h>

#include "signedchord/Error.hh"

#include "TestUtils.hh"

namespace signedchord
{
namespace test
{
//---------------------------------------------------------------------------//
double fraction_matching(DensityTable const& t,
                         std::function<double(double, double)> const& exact_bin)
{
    std::size_t ok = 0;
    for (std::size_t i = 0; i < t.size(); ++i)
    {
        double const ref = exact_bin(t.grid.edge(i), t.grid.edge(i + 1));
        if (std::fabs(t.density[i] - ref) <= 4 * t.error[i] + 1e-12)
            ++ok;
    }
    return double(ok) / t.size();
}

TEST(ChordsTest, sphere_density_and_moments)
{
    Body sphere = unit_sphere();
    auto est = estimate_chords(sphere, small_plan(), 200000, {0, 2, 32});
    EXPECT_EQ(est.lines_tried, est.lines_hit);
    // Bin average of l/2 over [a, b]
    double const frac = fraction_matching(
        est.mu_signed, [](double a, double b) { return (a + b) / 4; });
    EXPECT_GE(frac, 0.9);
    EXPECT_NEAR(4.0 / 3, est.mean_signed[1].value, 4 * est.mean_signed[1].error);
    EXPECT_NEAR(2.0, est.mean_signed[2].value, 4 * est.mean_signed[2].error);
    EXPECT_NEAR(16.0 / 3, est.mean_signed[4].value, 4 * est.mean_signed[4].error);
    EXPECT_DOUBLE_EQ(1.0, est.c_m.value);
    EXPECT_NEAR(4 * pi, est.surface_crofton.value, 4 * est.surface_crofton.error);
    EXPECT_LT(est.max_sq_identity_error, 1e-12);
}

TEST(ChordsTest, shell_multiplicity)
{
    Body shell = unit_shell();
    auto est = estimate_chords(shell, small_plan(), 200000, {0, 2, 64});
    EXPECT_NEAR(1.25, est.c_m.value, 4 * est.c_m.error);
    EXPECT_NEAR(14.0 / 15, est.mean_signed[1].value, 4 * est.mean_signed[1].error);
    auto ell = ell_from_fourth_moment(est, shell.metrics().volume);
    EXPECT_NEAR(14.0 / 15, ell.value, 4 * ell.error);
    EXPECT_NEAR(5 * pi, est.surface_crofton.value, 4 * est.surface_crofton.error);
    EXPECT_NEAR(4 * pi, est.hull_surface_crofton.value, 4 * est.hull_surface_crofton.error);
    // Negative pair lengths make the signed density dip below the segments
    EXPECT_GT(est.mu_negative.total_charge, 0);
    EXPECT_LT(est.max_sq_identity_error, 1e-9);
}

TEST(ChordsTest, reproducible_with_workers)
{
    Body shell = unit_shell();
    BatchPlan a = small_plan(5, 8), b = small_plan(5, 8);
    b.workers = 3;
    auto ea = estimate_chords(shell, a, 20000, {0, 2, 16});
    auto eb = estimate_chords(shell, b, 20000, {0, 2, 16});
    EXPECT_EQ(ea.mu_signed.density, eb.mu_signed.density);
    EXPECT_EQ(ea.mu_signed.error, eb.mu_signed.error);
}

TEST(RadiiTest, sphere)
{
    auto est = estimate_radii(unit_sphere(), small_plan(), 200000, {0, 2, 32});
    EXPECT_DOUBLE_EQ(1.0, est.integral_signed);
    EXPECT_NEAR(0.75, est.mean_signed.value, 4 * est.mean_signed.error);
    EXPECT_EQ(0.0, est.integral_negative.value);
}

TEST(RadiiTest, shell_normalizations)
{
    auto est = estimate_radii(unit_shell(), small_plan(), 100000, {0, 2, 32});
    EXPECT_DOUBLE_EQ(1.0, est.integral_signed);
    EXPECT_GT(est.integral_negative.value, 0.05);
    EXPECT_NEAR(est.integral_positive.value, est.integral_negative.value,
                4 * std::hypot(est.integral_positive.error, est.integral_negative.error));
    EXPECT_NEAR(est.mean_one.value, est.mean_signed.value, 1e-12);
    EXPECT_LT(est.max_sum_identity_error, 1e-9);
}

TEST(DistancesTest, sphere_autocorrelation)
{
    Body sphere = unit_sphere();
    auto est = estimate_distances(sphere, small_plan(), 400000, {0, 2, 32});
    EXPECT_NEAR(36.0 / 35, est.mean_distance.value, 4 * est.mean_distance.error);
    EXPECT_DOUBLE_EQ(1.0, est.gamma.gamma0);
    std::size_t ok = 0;
    for (std::size_t i = 0; i < 32; ++i)
    {
        double const a = est.gamma.grid.edge(i), b = est.gamma.grid.edge(i + 1);
        // Shell-volume average of gamma over the bin
        double const ref = integrate([](double r) { return r * r * sphere_gamma(r); }, a, b)
                           / ((b * b * b - a * a * a) / 3);
        if (std::fabs(est.gamma.gamma[i] - ref) <= 4 * est.gamma.error[i])
            ++ok;
    }
    EXPECT_GE(ok, 30u);
    auto slope = gamma_slope_at_zero(est.gamma);
    EXPECT_NEAR(-0.75, slope.value, 4 * slope.error);
}

TEST(DistancesTest, requires_metrics)
{
    Body lens{Solid::unite({Solid::sphere({-0.5, 0, 0}, 1), Solid::sphere({0.5, 0, 0}, 1)})};
    EXPECT_THROW(estimate_distances(lens, small_plan(), 100, {0, 6, 8}), Error);
}

TEST(RandomnessTest, sphere_relations)
{
    auto rr = check_randomness_relations(unit_sphere(), small_plan(), 100000, {0, 2, 32});
    EXPECT_GE(rr.nu_bins_within, 0.9);
    EXPECT_GE(rr.lambda_bins_within, 0.9);
    EXPECT_NEAR(16.0 / 3, rr.fourth_moment.value, 4 * rr.fourth_moment.error);
}

TEST(RandomnessTest, nonconvex_rejected)
{
    try
    {
        check_randomness_relations(unit_shell(), small_plan(), 100, {0, 2, 8});
        FAIL();
    }
    catch (Error const& e)
    {
        EXPECT_EQ(ErrorCode::nonconvex_unsupported, e.code());
    }
}

TEST(SavgolTest, exact_on_quadratics)
{
    std::size_t const n = 20;
    std::vector<double> y(n);
    for (std::size_t k = 0; k < n; ++k)
        y[k] = 3 - 2.0 * k + 0.5 * k * k;
    for (std::size_t i : {0u, 1u, 9u, 18u, 19u})
    {
        std::size_t first = 0;
        auto w = savgol_second_derivative(n, 7, i, first);
        ASSERT_EQ(7u, w.size());
        EXPECT_LE(first, i);
        EXPECT_LE(i, first + 6);
        double d2 = 0;
        for (std::size_t k = 0; k < w.size(); ++k)
            d2 += w[k] * y[first + k];
        EXPECT_NEAR(1.0, d2, 1e-10) << "i=" << i;
    }
}

TEST(SignedCldTest, curvature_of_exact_sphere_table)
{
    // gamma'' / |gamma'(0)| = (6 l / 16) / (3/4) = l / 2 = mu(l) for the ball
    GammaTable g;
    g.grid = {0, 2, 40};
    g.gamma0 = 1;
    for (std::size_t i = 0; i < g.grid.bins; ++i)
    {
        g.gamma.push_back(sphere_gamma(g.grid.center(i)));
        g.error.push_back(0);
    }
    auto cld = signed_cld_from_gamma(g, 7, -0.75);
    // Centered windows differentiate cubics exactly
    for (std::size_t i = 3; i + 3 < g.grid.bins; ++i)
        EXPECT_NEAR(g.grid.center(i) / 2, cld.values[i], 1e-9) << i;
    // Shifted end windows return the second derivative at the window center
    EXPECT_NEAR(g.grid.center(3) / 2, cld.values[0], 1e-9);
    EXPECT_NEAR(g.grid.center(g.grid.bins - 4) / 2, cld.values[g.grid.bins - 1], 1e-9);

    g.grid.bins = 6;
    g.gamma.resize(6);
    g.error.resize(6);
    try
    {
        signed_cld_from_gamma(g, 5, -0.75);
        FAIL();
    }
    catch (Error const& e)
    {
        EXPECT_EQ(ErrorCode::grid_too_coarse, e.code());
    }
}

TEST(SignedCldTest, gamma_from_density_inverts_sphere)
{
    HistogramGrid grid{0, 2, 200};
    DensityTable mu;
    mu.grid = grid;
    for (std::size_t i = 0; i < grid.bins; ++i)
    {
        mu.density.push_back(grid.center(i) / 2);
        mu.error.push_back(0);
    }
    std::vector<double> at{0.0, 0.5, 1.0, 1.5, 2.0};
    auto g = gamma_from_density(mu, 4.0 / 3, at);
    for (std::size_t k = 0; k < at.size(); ++k)
        EXPECT_NEAR(sphere_gamma(at[k]), g[k], 1e-4) << at[k];
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace signedchord
