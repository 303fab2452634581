//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedhist/MomentAccumulator.cc
//---------------------------------------------------------------------------//
#include "signedchord/signedhist/MomentAccumulator.hh"

#include "signedchord/Error.hh"
#include "signedchord/signedhist/Jackknife.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
void MomentAccumulator::add(double length, double weight)
{
    double term = weight;
    for (int k = 0; k <= max_order; ++k)
    {
        sum_[k] += term;
        sq_sum_[k] += term * term;
        term *= length;
    }
    if (weight > 0)
        ++n_plus_;
    else if (weight < 0)
        ++n_minus_;
}

//---------------------------------------------------------------------------//
void MomentAccumulator::merge(MomentAccumulator const& other)
{
    for (int k = 0; k <= max_order; ++k)
    {
        sum_[k] += other.sum_[k];
        sq_sum_[k] += other.sq_sum_[k];
    }
    n_plus_ += other.n_plus_;
    n_minus_ += other.n_minus_;
}

//---------------------------------------------------------------------------//
double MomentAccumulator::moment(int k) const
{
    if (k < 0 || k > max_order)
        throw Error(ErrorCode::invalid_argument, "moment order must be 0..4");
    if (sum_[0] == 0)
        throw Error(ErrorCode::zero_charge, "total charge is zero");
    return sum_[k] / sum_[0];
}

//---------------------------------------------------------------------------//
Estimate moment(std::span<MomentAccumulator const> batches, int k)
{
    if (k < 0 || k > MomentAccumulator::max_order)
        throw Error(ErrorCode::invalid_argument, "moment order must be 0..4");
    std::vector<double> num, den;
    for (auto const& acc : batches)
    {
        num.push_back(acc.sum(k));
        den.push_back(acc.sum(0));
    }
    return jackknife_ratio(num, den);
}

//---------------------------------------------------------------------------//
MomentAccumulator merged(std::span<MomentAccumulator const> batches)
{
    MomentAccumulator result;
    for (auto const& acc : batches)
        result.merge(acc);
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
