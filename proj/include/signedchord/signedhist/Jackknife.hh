//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/signedhist/Jackknife.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <cstddef>
#include <span>
#include <vector>

#include "signedchord/Estimate.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
/*!
 * Delete-one-batch jackknife of a smooth function of summed tallies.
 *
 * \c batch_sums[b][j] is tally j accumulated in batch b. The estimator \c f
 * receives the tallies summed over a set of batches; the value is \c f of
 * the full sums and the error is the jackknife spread of \c f over the
 * leave-one-batch-out sums. With fewer than two batches the error is NaN.
 */
template<class F>
Estimate jackknife(std::vector<std::vector<double>> const& batch_sums, F&& f)
{
    std::size_t const nb = batch_sums.size();
    std::size_t const nt = nb ? batch_sums.front().size() : 0;
    std::vector<double> total(nt, 0.0);
    for (auto const& row : batch_sums)
    {
        for (std::size_t j = 0; j < nt; ++j)
            total[j] += row[j];
    }

    Estimate result;
    result.value = f(std::span<double const>(total));
    if (nb < 2)
    {
        result.error = std::nan("");
        return result;
    }

    std::vector<double> loo(nt);
    std::vector<double> theta(nb);
    double mean = 0;
    for (std::size_t b = 0; b < nb; ++b)
    {
        for (std::size_t j = 0; j < nt; ++j)
            loo[j] = total[j] - batch_sums[b][j];
        theta[b] = f(std::span<double const>(loo));
        mean += theta[b];
    }
    mean /= static_cast<double>(nb);
    double ss = 0;
    for (double t : theta)
        ss += (t - mean) * (t - mean);
    result.error = std::sqrt(ss * static_cast<double>(nb - 1)
                             / static_cast<double>(nb));
    return result;
}

// Jackknife of sum(num) / sum(den)
Estimate jackknife_ratio(std::span<double const> num, std::span<double const> den);

// Mean of per-batch sums divided by per-batch counts, pooled
Estimate jackknife_mean(std::span<double const> sums, std::span<double const> counts);

//---------------------------------------------------------------------------//
}  // namespace signedchord
