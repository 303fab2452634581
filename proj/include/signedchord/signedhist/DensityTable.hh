//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/signedhist/DensityTable.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <iosfwd>
#include <span>
#include <vector>

#include "SignedHistogram.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
/*!
 * Binned density normalized by a total charge.
 *
 * density[i] = charge[i] / (total_charge * width). Out-of-range charge is
 * kept as a fraction so that the density plus out_of_range_fraction
 * integrates to one.
 */
struct DensityTable
{
    HistogramGrid grid;
    std::vector<double> density;
    std::vector<double> error;
    std::vector<double> charge;
    std::vector<std::uint64_t> n_plus;
    std::vector<std::uint64_t> n_minus;
    double total_charge{0};
    double out_of_range_fraction{0};
    std::uint64_t n_events{0};

    std::size_t size() const { return density.size(); }
};

// Normalize one histogram (errors are NaN); throws zero_charge
DensityTable normalize(SignedHistogram const& hist, double total_charge);

// Normalize the merged batches with per-bin jackknife errors
DensityTable normalize(std::span<SignedHistogram const> batches,
                       std::span<double const> batch_totals);

// Sum over bins of density * width, plus the out-of-range fraction
double integral(DensityTable const& table);

// Write the table as CSV with a comment footer
void write_csv(std::ostream& os, DensityTable const& table, std::uint64_t seed);

//---------------------------------------------------------------------------//
}  // namespace signedchord
