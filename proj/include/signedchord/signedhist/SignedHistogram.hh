//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/signedhist/SignedHistogram.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace signedchord
{
//---------------------------------------------------------------------------//
//! One event of a signed distribution
struct SignedSample
{
    double length{0};
    int charge{1};
};

//---------------------------------------------------------------------------//
//! Uniform binning of [lo, hi)
struct HistogramGrid
{
    double lo{0};
    double hi{1};
    std::size_t bins{256};

    double width() const { return (hi - lo) / static_cast<double>(bins); }
    double edge(std::size_t i) const
    {
        return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(bins);
    }
    double center(std::size_t i) const
    {
        return lo + (hi - lo) * (static_cast<double>(i) + 0.5)
                        / static_cast<double>(bins);
    }

    bool operator==(HistogramGrid const&) const = default;
};

// Throw invalid_argument unless lo < hi and bins >= 1
void validate(HistogramGrid const& grid);

//---------------------------------------------------------------------------//
/*!
 * Charge-weighted histogram.
 *
 * Each event adds its weight ("charge") to one bin, or to the underflow or
 * overflow tallies when it falls outside the grid; nothing is dropped. The
 * squared weights are kept for error estimates, and events are counted
 * separately by the sign of their weight. With unit charges every tally is
 * an integer, so merging is exact and order independent.
 */
class SignedHistogram
{
  public:
    //! Empty histogram (no bins); merges only with other empty histograms
    SignedHistogram() = default;

    explicit SignedHistogram(HistogramGrid const& grid);

    //// ACCUMULATION ////

    void accumulate(SignedSample s) { this->add(s.length, s.charge); }

    // Add an event with an arbitrary real weight
    void add(double length, double weight);

    // Add all tallies of a histogram with identical edges
    void merge(SignedHistogram const& other);

    //// ACCESSORS ////

    HistogramGrid const& grid() const { return grid_; }
    std::size_t size() const { return charge_.size(); }

    double charge(std::size_t i) const { return charge_[i]; }
    double sq_charge(std::size_t i) const { return sq_charge_[i]; }
    std::uint64_t n_plus(std::size_t i) const { return n_plus_[i]; }
    std::uint64_t n_minus(std::size_t i) const { return n_minus_[i]; }

    double overflow_charge() const { return overflow_; }
    double underflow_charge() const { return underflow_; }

    // Charge summed over bins and out-of-range tallies
    double total_charge() const;

    std::uint64_t total_plus() const { return total_plus_; }
    std::uint64_t total_minus() const { return total_minus_; }
    std::uint64_t n_events() const { return total_plus_ + total_minus_; }

  private:
    HistogramGrid grid_{0, 1, 0};
    std::vector<double> charge_;
    std::vector<double> sq_charge_;
    std::vector<std::uint64_t> n_plus_;
    std::vector<std::uint64_t> n_minus_;
    double overflow_{0};
    double underflow_{0};
    std::uint64_t total_plus_{0};
    std::uint64_t total_minus_{0};
};

// Fieldwise sum; throws edge_mismatch if the grids differ
SignedHistogram merge(SignedHistogram a, SignedHistogram const& b);

//---------------------------------------------------------------------------//
}  // namespace signedchord
