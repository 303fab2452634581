//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/signedhist/MomentAccumulator.hh
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstdint>
#include <span>

#include "signedchord/Estimate.hh"
#include "SignedHistogram.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
/*!
 * Signed power sums of event lengths for k = 0 through 4.
 *
 * The zeroth sum is the total charge; normalized moments divide each sum by
 * it.
 */
class MomentAccumulator
{
  public:
    static constexpr int max_order = 4;

    void accumulate(SignedSample s) { this->add(s.length, s.charge); }
    void add(double length, double weight);
    void merge(MomentAccumulator const& other);

    //! Signed sum of weight * length^k
    double sum(int k) const { return sum_.at(k); }
    //! Sum of (weight * length^k)^2
    double sq_sum(int k) const { return sq_sum_.at(k); }
    double total_charge() const { return sum_[0]; }
    std::uint64_t n_plus() const { return n_plus_; }
    std::uint64_t n_minus() const { return n_minus_; }

    // Charge-normalized moment; throws zero_charge
    double moment(int k) const;

  private:
    std::array<double, max_order + 1> sum_{};
    std::array<double, max_order + 1> sq_sum_{};
    std::uint64_t n_plus_{0};
    std::uint64_t n_minus_{0};
};

// Charge-normalized moment over batches with a jackknife error
Estimate moment(std::span<MomentAccumulator const> batches, int k);

// Merge per-batch accumulators
MomentAccumulator merged(std::span<MomentAccumulator const> batches);

//---------------------------------------------------------------------------//
}  // namespace signedchord
