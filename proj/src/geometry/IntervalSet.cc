//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file geometry/IntervalSet.cc
//---------------------------------------------------------------------------//
#include "signedchord/geometry/IntervalSet.hh"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "signedchord/Error.hh"

namespace signedchord
{
namespace
{
//---------------------------------------------------------------------------//
// Close gaps shorter than eps, then drop slivers shorter than eps.
// Input must be sorted by lo.
std::vector<Interval> clean_sorted(std::vector<Interval> const& in, double eps)
{
    std::vector<Interval> merged;
    merged.reserve(in.size());
    for (auto const& iv : in)
    {
        if (!(iv.hi > iv.lo))
            continue;
        if (!merged.empty() && iv.lo - merged.back().hi < eps)
        {
            merged.back().hi = std::max(merged.back().hi, iv.hi);
        }
        else
        {
            merged.push_back(iv);
        }
    }
    std::erase_if(merged,
                  [eps](Interval const& iv) { return iv.length() < eps; });
    return merged;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
IntervalSet IntervalSet::from_raw(std::vector<Interval> raw, double eps)
{
    std::sort(raw.begin(), raw.end(), [](Interval const& a, Interval const& b) {
        return a.lo < b.lo;
    });
    IntervalSet result;
    result.iv_ = clean_sorted(raw, eps);
    return result;
}

//---------------------------------------------------------------------------//
IntervalSet IntervalSet::from_sorted(std::vector<Interval> sorted)
{
    for (std::size_t i = 0; i < sorted.size(); ++i)
    {
        if (!(sorted[i].hi > sorted[i].lo)
            || (i > 0 && !(sorted[i].lo > sorted[i - 1].hi)))
        {
            throw Error(ErrorCode::invalid_argument,
                        "intervals must be nonempty, disjoint and ascending");
        }
    }
    IntervalSet result;
    result.iv_ = std::move(sorted);
    return result;
}

//---------------------------------------------------------------------------//
double IntervalSet::total_length() const
{
    return std::accumulate(
        iv_.begin(), iv_.end(), 0.0, [](double acc, Interval const& iv) {
            return acc + iv.length();
        });
}

//---------------------------------------------------------------------------//
IntervalSet IntervalSet::clipped(double lo, double hi, double eps) const
{
    std::vector<Interval> out;
    out.reserve(iv_.size());
    for (auto const& iv : iv_)
    {
        Interval c{std::max(iv.lo, lo), std::min(iv.hi, hi)};
        if (c.hi > c.lo)
            out.push_back(c);
    }
    IntervalSet result;
    result.iv_ = clean_sorted(out, eps);
    return result;
}

//---------------------------------------------------------------------------//
IntervalSet IntervalSet::rebased(double origin) const
{
    IntervalSet result = *this;
    for (auto& iv : result.iv_)
    {
        iv.lo -= origin;
        iv.hi -= origin;
    }
    return result;
}

//---------------------------------------------------------------------------//
/*!
 * Sweep over the merged endpoints, tracking membership in each operand.
 */
IntervalSet
interval_boolean(BoolOp op, IntervalSet const& a, IntervalSet const& b, double eps)
{
    if (op == BoolOp::unite)
    {
        if (a.empty())
            return b;
        if (b.empty())
            return a;
    }
    else if (a.empty() || (op == BoolOp::intersect && b.empty()))
    {
        return {};
    }
    else if (op == BoolOp::subtract && b.empty())
    {
        return a;
    }

    struct Event
    {
        double t;
        int delta_a;
        int delta_b;
    };
    std::vector<Event> events;
    events.reserve(2 * (a.size() + b.size()));
    for (auto const& iv : a.intervals())
    {
        events.push_back({iv.lo, 1, 0});
        events.push_back({iv.hi, -1, 0});
    }
    for (auto const& iv : b.intervals())
    {
        events.push_back({iv.lo, 0, 1});
        events.push_back({iv.hi, 0, -1});
    }
    std::sort(events.begin(), events.end(), [](Event const& x, Event const& y) {
        return x.t < y.t;
    });

    auto member = [op](int in_a, int in_b) {
        switch (op)
        {
            case BoolOp::unite:
                return in_a > 0 || in_b > 0;
            case BoolOp::intersect:
                return in_a > 0 && in_b > 0;
            case BoolOp::subtract:
                return in_a > 0 && in_b == 0;
        }
        return false;
    };

    std::vector<Interval> out;
    int in_a = 0;
    int in_b = 0;
    bool inside = false;
    double start = 0;
    std::size_t i = 0;
    while (i < events.size())
    {
        double const t = events[i].t;
        // Apply every event at this parameter before testing membership
        for (; i < events.size() && events[i].t == t; ++i)
        {
            in_a += events[i].delta_a;
            in_b += events[i].delta_b;
        }
        bool const now = member(in_a, in_b);
        if (now && !inside)
        {
            start = t;
        }
        else if (!now && inside)
        {
            out.push_back({start, t});
        }
        inside = now;
    }
    return IntervalSet::from_raw(std::move(out), eps);
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
