//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/geometry/IntervalSet.hh
//---------------------------------------------------------------------------//
#pragma once

#include <span>
#include <vector>

namespace signedchord
{
//---------------------------------------------------------------------------//
//! Closed parameter interval [lo, hi] along a line.
struct Interval
{
    double lo{0};
    double hi{0};

    double length() const { return hi - lo; }
};

//---------------------------------------------------------------------------//
/*!
 * Sorted, pairwise-disjoint parameter intervals of a line inside a body.
 *
 * Invariants: lo < hi for every interval, intervals ascend, and consecutive
 * intervals are separated by a gap of at least the merge tolerance that was
 * used to build the set. Intervals shorter than the tolerance are dropped and
 * gaps shorter than the tolerance are closed.
 */
class IntervalSet
{
  public:
    //! Empty set
    IntervalSet() = default;

    // Build from arbitrary (possibly overlapping, unsorted) intervals
    static IntervalSet from_raw(std::vector<Interval> raw, double eps);

    // Build from intervals already satisfying the invariants (validated)
    static IntervalSet from_sorted(std::vector<Interval> sorted);

    //// ACCESSORS ////

    std::span<Interval const> intervals() const { return iv_; }
    std::size_t size() const { return iv_.size(); }
    bool empty() const { return iv_.empty(); }
    Interval const& operator[](std::size_t i) const { return iv_[i]; }

    // Sum of interval lengths
    double total_length() const;

    //// TRANSFORMS ////

    // Restrict to [lo, hi] and re-clean with the given tolerance
    IntervalSet clipped(double lo, double hi, double eps) const;

    // Shift every endpoint by -origin so that the parameter origin moves
    IntervalSet rebased(double origin) const;

  private:
    std::vector<Interval> iv_;
};

//---------------------------------------------------------------------------//
//! Boolean set operation applied along a line.
enum class BoolOp
{
    unite,
    intersect,
    subtract,
};

// Apply a set operation to two interval sets
IntervalSet
interval_boolean(BoolOp op, IntervalSet const& a, IntervalSet const& b, double eps);

//---------------------------------------------------------------------------//
}  // namespace signedchord
