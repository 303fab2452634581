//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedhist/Jackknife.cc
//---------------------------------------------------------------------------//
#include "signedchord/signedhist/Jackknife.hh"

#include "signedchord/Error.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
Estimate jackknife_ratio(std::span<double const> num, std::span<double const> den)
{
    if (num.size() != den.size())
        throw Error(ErrorCode::internal, "jackknife tallies differ in length");
    std::vector<std::vector<double>> rows(num.size());
    for (std::size_t b = 0; b < num.size(); ++b)
        rows[b] = {num[b], den[b]};
    double total_den = 0;
    for (double d : den)
        total_den += d;
    if (total_den == 0)
        throw Error(ErrorCode::zero_charge, "total charge is zero");
    return jackknife(rows, [](std::span<double const> t) { return t[0] / t[1]; });
}

//---------------------------------------------------------------------------//
Estimate jackknife_mean(std::span<double const> sums, std::span<double const> counts)
{
    return jackknife_ratio(sums, counts);
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
