//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedhist/TwoSample.cc
//---------------------------------------------------------------------------//
#include "signedchord/signedhist/TwoSample.hh"

#include <cmath>
#include <vector>
#include <boost/math/special_functions/gamma.hpp>

#include "signedchord/Error.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
ChiSquareResult chi_square_two_sample(std::span<double const> a,
                                      std::span<double const> b,
                                      double min_count)
{
    if (a.size() != b.size())
        throw Error(ErrorCode::edge_mismatch, "two-sample test needs equal binning");

    // Pool adjacent bins; a short trailing cell is folded into the last one
    std::vector<double> pa, pb;
    double ca = 0, cb = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        if (a[i] < 0 || b[i] < 0)
            throw Error(ErrorCode::invalid_argument, "two-sample counts must be nonnegative");
        ca += a[i];
        cb += b[i];
        if (ca + cb >= min_count)
        {
            pa.push_back(ca);
            pb.push_back(cb);
            ca = cb = 0;
        }
    }
    if (ca + cb > 0)
    {
        if (pa.empty())
        {
            pa.push_back(0);
            pb.push_back(0);
        }
        pa.back() += ca;
        pb.back() += cb;
    }

    double na = 0, nb = 0;
    for (std::size_t i = 0; i < pa.size(); ++i)
    {
        na += pa[i];
        nb += pb[i];
    }
    ChiSquareResult result;
    if (pa.size() < 2 || na == 0 || nb == 0)
        return result;

    double const ka = std::sqrt(nb / na);
    double const kb = std::sqrt(na / nb);
    for (std::size_t i = 0; i < pa.size(); ++i)
    {
        double const diff = ka * pa[i] - kb * pb[i];
        result.statistic += diff * diff / (pa[i] + pb[i]);
    }
    result.dof = static_cast<int>(pa.size()) - 1;
    result.p_value = boost::math::gamma_q(0.5 * result.dof, 0.5 * result.statistic);
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
