//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/unit/SignedHistogram.test.cc
//---------------------------------------------------------------------------//
#include "signedchord/signedhist/SignedHistogram.hh"

#include <sstream>
#include <gtest/gtest.h>

#include "signedchord/Error.hh"
#include "signedchord/sampling/RandomSource.hh"
#include "signedchord/signedhist/DensityTable.hh"
#include "signedchord/signedhist/Jackknife.hh"
#include "signedchord/signedhist/MomentAccumulator.hh"
#include "signedchord/signedhist/TwoSample.hh"

namespace signedchord
{
namespace test
{
//---------------------------------------------------------------------------//
TEST(SignedHistogramTest, tallies)
{
    SignedHistogram h({0, 1, 4});
    h.add(0.1, 1);
    h.add(0.1, -1);
    h.add(0.3, 1);
    h.add(0.3, 1);
    h.add(1.5, 1);
    h.add(-0.5, -1);
    EXPECT_EQ(0.0, h.charge(0));
    EXPECT_EQ(2.0, h.charge(1));
    EXPECT_EQ(2.0, h.sq_charge(0));
    EXPECT_EQ(1u, h.n_plus(0));
    EXPECT_EQ(1u, h.n_minus(0));
    EXPECT_EQ(1.0, h.overflow_charge());
    EXPECT_EQ(-1.0, h.underflow_charge());
    EXPECT_EQ(2.0, h.total_charge());
    EXPECT_EQ(6u, h.n_events());
}

TEST(SignedHistogramTest, upper_edge_goes_to_overflow)
{
    SignedHistogram h({0, 2, 8});
    h.add(2.0, 1);
    h.add(0.0, 1);
    EXPECT_EQ(1.0, h.overflow_charge());
    EXPECT_EQ(1.0, h.charge(0));
}

TEST(SignedHistogramTest, merge_is_exact_and_checks_edges)
{
    HistogramGrid g{0, 2, 16};
    SignedHistogram a(g), b(g), all(g);
    RandomSource rng(1, 0);
    for (int i = 0; i < 1000; ++i)
    {
        double x = rng.uniform(0, 2.2);
        int q = rng.uniform() < 0.3 ? -1 : 1;
        (i % 2 ? a : b).add(x, q);
        all.add(x, q);
    }
    SignedHistogram m = merge(a, b);
    for (std::size_t i = 0; i < g.bins; ++i)
        EXPECT_EQ(all.charge(i), m.charge(i));
    EXPECT_EQ(all.overflow_charge(), m.overflow_charge());

    SignedHistogram other({0, 2, 17});
    try
    {
        a.merge(other);
        FAIL();
    }
    catch (Error const& e)
    {
        EXPECT_EQ(ErrorCode::edge_mismatch, e.code());
    }
}

TEST(SignedHistogramTest, grid_validation)
{
    EXPECT_THROW(validate(HistogramGrid{1, 1, 8}), Error);
    EXPECT_THROW(validate(HistogramGrid{0, 1, 0}), Error);
    EXPECT_NO_THROW(validate(HistogramGrid{0, 1, 8}));
}

TEST(MomentAccumulatorTest, signed_moments)
{
    MomentAccumulator m;
    m.add(1, 1);
    m.add(2, 1);
    m.add(3, -1);
    EXPECT_EQ(1.0, m.total_charge());
    EXPECT_DOUBLE_EQ(0.0, m.moment(1));
    EXPECT_DOUBLE_EQ(1 + 4 - 9, m.moment(2));
    EXPECT_DOUBLE_EQ(1 + 16 - 81, m.moment(4));
    EXPECT_EQ(2u, m.n_plus());
    EXPECT_EQ(1u, m.n_minus());
}

TEST(JackknifeTest, mean_matches_classical_error)
{
    // For a plain mean over equal batches the jackknife is the standard error
    std::vector<double> sums{1, 2, 3, 4, 5, 6, 7, 8};
    std::vector<double> counts(8, 1.0);
    Estimate e = jackknife_mean(sums, counts);
    EXPECT_DOUBLE_EQ(4.5, e.value);
    double var = 0;
    for (double s : sums)
        var += (s - 4.5) * (s - 4.5);
    var /= 7;
    EXPECT_NEAR(std::sqrt(var / 8), e.error, 1e-12);

    Estimate r = jackknife_ratio(sums, counts);
    EXPECT_NEAR(e.value, r.value, 1e-14);
    EXPECT_NEAR(e.error, r.error, 1e-12);
}

TEST(JackknifeTest, single_batch_has_no_error)
{
    std::vector<double> one{2.0}, cnt{1.0};
    EXPECT_TRUE(std::isnan(jackknife_mean(one, cnt).error));
}

TEST(DensityTableTest, normalize_and_integrate)
{
    HistogramGrid g{0, 1, 10};
    std::vector<SignedHistogram> batches(4, SignedHistogram(g));
    std::vector<double> totals(4, 0.0);
    RandomSource rng(2, 0);
    for (int b = 0; b < 4; ++b)
    {
        for (int i = 0; i < 500; ++i)
        {
            batches[b].add(rng.uniform(0, 1.25), 1);
            totals[b] += 1;
        }
    }
    DensityTable t = normalize(batches, totals);
    // The integral counts out-of-range charge so that it is always one
    EXPECT_NEAR(1.0, integral(t), 1e-14);
    EXPECT_EQ(2000u, t.n_events);
    EXPECT_NEAR(0.2, t.out_of_range_fraction, 0.05);

    std::ostringstream os;
    write_csv(os, t, 42);
    std::string const csv = os.str();
    EXPECT_EQ(0u, csv.find("bin_lo,bin_hi,density,stderr,charge,n_plus,n_minus\n"));
    EXPECT_NE(std::string::npos, csv.find("# seed=42\n"));
    EXPECT_NE(std::string::npos, csv.find("# total_charge=2000\n"));
}

TEST(DensityTableTest, zero_charge)
{
    SignedHistogram h({0, 1, 8});
    try
    {
        normalize(h, 0.0);
        FAIL();
    }
    catch (Error const& e)
    {
        EXPECT_EQ(ErrorCode::zero_charge, e.code());
    }
}

TEST(TwoSampleTest, same_and_different)
{
    RandomSource rng(3, 0);
    std::vector<double> a(20), b(20), c(20);
    for (int i = 0; i < 20000; ++i)
    {
        a[static_cast<std::size_t>(rng.uniform() * 20)] += 1;
        if (i % 2)
            b[static_cast<std::size_t>(rng.uniform() * 20)] += 1;
        c[static_cast<std::size_t>(20 * rng.uniform() * rng.uniform())] += 1;
    }
    auto same = chi_square_two_sample(a, b);
    EXPECT_EQ(19, same.dof);
    EXPECT_GT(same.p_value, 1e-3);
    auto diff = chi_square_two_sample(a, c);
    EXPECT_LT(diff.p_value, 1e-10);
}

TEST(TwoSampleTest, sparse_bins_are_pooled)
{
    std::vector<double> a{100, 1, 1, 1, 100}, b{100, 1, 2, 1, 100};
    auto r = chi_square_two_sample(a, b, 10);
    EXPECT_LT(r.dof, 4);
    EXPECT_GT(r.p_value, 0.5);
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace signedchord
