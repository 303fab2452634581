//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/sampling/BatchPlan.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <utility>
#include <vector>

#include "RandomSource.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
/*!
 * Division of a Monte Carlo run into independent batches.
 *
 * Batch \c b draws from \c RandomSource(seed, b) and owns a fixed share of
 * the requested samples. Workers only decide which thread processes which
 * batch, so results never depend on the worker count. Batches also provide
 * the replicas used for jackknife error estimates.
 */
struct BatchPlan
{
    std::uint64_t seed{20240917};
    std::size_t streams{64};
    std::size_t workers{1};

    //! Number of samples assigned to batch b out of total
    std::size_t quota(std::size_t total, std::size_t b) const
    {
        return total / streams + (b < total % streams ? 1 : 0);
    }

    //! Random source of batch b
    RandomSource source(std::size_t b) const { return {seed, b}; }
};

// Check a plan, throwing invalid_argument for zero streams or workers
void validate(BatchPlan const& plan);

// Call f(b) for every batch, spreading batches over the plan's workers
void for_each_batch(BatchPlan const& plan,
                    std::function<void(std::size_t)> const& f);

//---------------------------------------------------------------------------//
/*!
 * Run one callable per batch and collect the results in batch order.
 */
template<class F>
auto map_batches(BatchPlan const& plan, F&& f)
{
    using T = decltype(f(std::size_t{}, std::declval<RandomSource&>()));
    std::vector<T> results(plan.streams);
    for_each_batch(plan, [&](std::size_t b) {
        RandomSource rng = plan.source(b);
        results[b] = f(b, rng);
    });
    return results;
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
