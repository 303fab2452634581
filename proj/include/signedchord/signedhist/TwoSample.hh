//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/signedhist/TwoSample.hh
//---------------------------------------------------------------------------//
#pragma once

#include <span>

namespace signedchord
{
//---------------------------------------------------------------------------//
struct ChiSquareResult
{
    double statistic{0};
    int dof{0};
    double p_value{1};
};

//---------------------------------------------------------------------------//
/*!
 * Chi-square test that two binned samples share one distribution.
 *
 * Adjacent bins are pooled until each pooled cell holds at least
 * \c min_count events in the two samples combined; the sample totals may
 * differ.
 */
ChiSquareResult chi_square_two_sample(std::span<double const> a,
                                      std::span<double const> b,
                                      double min_count = 10);

//---------------------------------------------------------------------------//
}  // namespace signedchord
