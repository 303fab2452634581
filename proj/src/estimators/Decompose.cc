//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file estimators/Decompose.cc
//---------------------------------------------------------------------------//
#include "signedchord/estimators/Decompose.hh"

#include "signedchord/Error.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
RadiiDecomposition radii_decompose(IntervalSet const& ray_intervals)
{
    if (ray_intervals.empty() || ray_intervals[0].lo != 0)
    {
        throw Error(ErrorCode::empty_intersection,
                    "ray origin is not inside the body");
    }
    RadiiDecomposition result;
    result.radii.reserve(2 * ray_intervals.size() - 1);
    result.radii.push_back({ray_intervals[0].hi, +1});
    for (std::size_t j = 1; j < ray_intervals.size(); ++j)
    {
        result.radii.push_back({ray_intervals[j].lo, -1});
        result.radii.push_back({ray_intervals[j].hi, +1});
    }
    result.osd_length = ray_intervals.total_length();
    return result;
}

//---------------------------------------------------------------------------//
ChordDecomposition chord_decompose(IntervalSet const& intervals)
{
    if (intervals.empty())
        throw Error(ErrorCode::empty_intersection, "line misses the body");

    std::size_t const n = intervals.size();
    ChordDecomposition result;
    result.n_intervals = n;
    result.ocd_length = intervals.total_length();
    result.pieces.reserve(2 * n * n - n);
    for (std::size_t k = 0; k < n; ++k)
    {
        result.pieces.push_back({intervals[k].length(), +1, ChordTerm::segment});
    }
    for (std::size_t k = 1; k < n; ++k)
    {
        Interval const& sk = intervals[k];
        for (std::size_t j = 0; j < k; ++j)
        {
            Interval const& sj = intervals[j];
            result.pieces.push_back({sk.lo - sj.hi, +1, ChordTerm::pair_positive});
            result.pieces.push_back({sk.hi - sj.lo, +1, ChordTerm::pair_positive});
            result.pieces.push_back({sk.lo - sj.lo, -1, ChordTerm::pair_negative});
            result.pieces.push_back({sk.hi - sj.hi, -1, ChordTerm::pair_negative});
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
