//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedhist/SignedHistogram.cc
//---------------------------------------------------------------------------//
#include "signedchord/signedhist/SignedHistogram.hh"

#include <cmath>

#include "signedchord/Error.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
void validate(HistogramGrid const& grid)
{
    if (!(std::isfinite(grid.lo) && std::isfinite(grid.hi) && grid.lo < grid.hi))
        throw Error(ErrorCode::invalid_argument, "histogram range must satisfy lo < hi");
    if (grid.bins == 0)
        throw Error(ErrorCode::invalid_argument, "histogram needs at least one bin");
}

//---------------------------------------------------------------------------//
SignedHistogram::SignedHistogram(HistogramGrid const& grid)
    : grid_(grid)
    , charge_(grid.bins, 0.0)
    , sq_charge_(grid.bins, 0.0)
    , n_plus_(grid.bins, 0)
    , n_minus_(grid.bins, 0)
{
    validate(grid);
}

//---------------------------------------------------------------------------//
void SignedHistogram::add(double length, double weight)
{
    if (weight > 0)
        ++total_plus_;
    else if (weight < 0)
        ++total_minus_;

    double const u = (length - grid_.lo) / (grid_.hi - grid_.lo)
                     * static_cast<double>(grid_.bins);
    if (!(u >= 0))
    {
        underflow_ += weight;
        return;
    }
    if (u >= static_cast<double>(grid_.bins))
    {
        overflow_ += weight;
        return;
    }
    auto const i = static_cast<std::size_t>(u);
    charge_[i] += weight;
    sq_charge_[i] += weight * weight;
    if (weight > 0)
        ++n_plus_[i];
    else if (weight < 0)
        ++n_minus_[i];
}

//---------------------------------------------------------------------------//
void SignedHistogram::merge(SignedHistogram const& other)
{
    if (!(grid_ == other.grid_))
    {
        throw Error(ErrorCode::edge_mismatch,
                    "cannot merge histograms with different bin edges");
    }
    for (std::size_t i = 0; i < charge_.size(); ++i)
    {
        charge_[i] += other.charge_[i];
        sq_charge_[i] += other.sq_charge_[i];
        n_plus_[i] += other.n_plus_[i];
        n_minus_[i] += other.n_minus_[i];
    }
    overflow_ += other.overflow_;
    underflow_ += other.underflow_;
    total_plus_ += other.total_plus_;
    total_minus_ += other.total_minus_;
}

//---------------------------------------------------------------------------//
double SignedHistogram::total_charge() const
{
    double result = underflow_;
    for (double c : charge_)
        result += c;
    return result + overflow_;
}

//---------------------------------------------------------------------------//
SignedHistogram merge(SignedHistogram a, SignedHistogram const& b)
{
    a.merge(b);
    return a;
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
