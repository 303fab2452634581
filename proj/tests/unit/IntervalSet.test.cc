//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/unit/IntervalSet.test.cc
//---------------------------------------------------------------------------//
#include "signedchord/geometry/IntervalSet.hh"

#include <gtest/gtest.h>

#include "signedchord/Error.hh"

namespace signedchord
{
namespace test
{
//---------------------------------------------------------------------------//
std::vector<std::pair<double, double>> flatten(IntervalSet const& s)
{
    std::vector<std::pair<double, double>> out;
    for (auto const& iv : s.intervals())
        out.emplace_back(iv.lo, iv.hi);
    return out;
}

using PairVec = std::vector<std::pair<double, double>>;

TEST(IntervalSetTest, from_raw_merges_and_sorts)
{
    auto s = IntervalSet::from_raw({{3, 4}, {0, 1}, {0.5, 2}}, 1e-12);
    EXPECT_EQ((PairVec{{0, 2}, {3, 4}}), flatten(s));
    EXPECT_DOUBLE_EQ(3.0, s.total_length());
}

TEST(IntervalSetTest, from_raw_drops_slivers_and_closes_gaps)
{
    auto s = IntervalSet::from_raw({{0, 1}, {1 + 1e-10, 2}, {5, 5 + 1e-10}}, 1e-9);
    EXPECT_EQ((PairVec{{0, 2}}), flatten(s));
}

TEST(IntervalSetTest, from_sorted_validates)
{
    EXPECT_NO_THROW(IntervalSet::from_sorted({{0, 1}, {2, 3}}));
    EXPECT_THROW(IntervalSet::from_sorted({{0, 2}, {1, 3}}), Error);
    EXPECT_THROW(IntervalSet::from_sorted({{1, 1}}), Error);
}

TEST(IntervalSetTest, booleans)
{
    auto a = IntervalSet::from_sorted({{0, 4}});
    auto b = IntervalSet::from_sorted({{1, 2}, {3, 5}});
    EXPECT_EQ((PairVec{{0, 5}}), flatten(interval_boolean(BoolOp::unite, a, b, 1e-12)));
    EXPECT_EQ((PairVec{{1, 2}, {3, 4}}),
              flatten(interval_boolean(BoolOp::intersect, a, b, 1e-12)));
    EXPECT_EQ((PairVec{{0, 1}, {2, 3}}),
              flatten(interval_boolean(BoolOp::subtract, a, b, 1e-12)));
    EXPECT_TRUE(interval_boolean(BoolOp::subtract, b, b, 1e-12).empty());
}

TEST(IntervalSetTest, clip_and_rebase)
{
    auto s = IntervalSet::from_sorted({{-2, -1}, {0, 3}});
    EXPECT_EQ((PairVec{{0.5, 3}}), flatten(s.clipped(0.5, 10, 1e-12)));
    EXPECT_EQ((PairVec{{-3, -2}, {-1, 2}}), flatten(s.rebased(1)));
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace signedchord
