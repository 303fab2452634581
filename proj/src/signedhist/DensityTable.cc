//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedhist/DensityTable.cc
//---------------------------------------------------------------------------//
#include "signedchord/signedhist/DensityTable.hh"

#include <cmath>
#include <cstdio>
#include <ostream>
#include <string>

#include "signedchord/Error.hh"

namespace signedchord
{
namespace
{
//---------------------------------------------------------------------------//
DensityTable fill(SignedHistogram const& hist, double total_charge)
{
    if (total_charge == 0)
        throw Error(ErrorCode::zero_charge, "cannot normalize by zero total charge");
    DensityTable result;
    result.grid = hist.grid();
    result.total_charge = total_charge;
    result.n_events = hist.n_events();
    double const scale = 1 / (total_charge * hist.grid().width());
    for (std::size_t i = 0; i < hist.size(); ++i)
    {
        result.density.push_back(hist.charge(i) * scale);
        result.charge.push_back(hist.charge(i));
        result.n_plus.push_back(hist.n_plus(i));
        result.n_minus.push_back(hist.n_minus(i));
    }
    result.error.assign(hist.size(), std::nan(""));
    result.out_of_range_fraction
        = (hist.overflow_charge() + hist.underflow_charge()) / total_charge;
    return result;
}

std::string fmt(double v)
{
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
DensityTable normalize(SignedHistogram const& hist, double total_charge)
{
    return fill(hist, total_charge);
}

//---------------------------------------------------------------------------//
/*!
 * The error of each bin is the delete-one-batch jackknife of
 * charge[i] / (total * width).
 */
DensityTable normalize(std::span<SignedHistogram const> batches,
                       std::span<double const> batch_totals)
{
    if (batches.empty() || batches.size() != batch_totals.size())
        throw Error(ErrorCode::internal, "batch histograms and totals mismatch");
    SignedHistogram total = batches.front();
    for (std::size_t b = 1; b < batches.size(); ++b)
        total.merge(batches[b]);
    double norm = 0;
    for (double t : batch_totals)
        norm += t;

    DensityTable result = fill(total, norm);
    std::size_t const nb = batches.size();
    if (nb < 2)
        return result;
    double const width = total.grid().width();
    double const factor = static_cast<double>(nb - 1) / static_cast<double>(nb);
    std::vector<double> theta(nb);
    for (std::size_t i = 0; i < total.size(); ++i)
    {
        double mean = 0;
        for (std::size_t b = 0; b < nb; ++b)
        {
            theta[b] = (total.charge(i) - batches[b].charge(i))
                       / ((norm - batch_totals[b]) * width);
            mean += theta[b];
        }
        mean /= static_cast<double>(nb);
        double ss = 0;
        for (double t : theta)
            ss += (t - mean) * (t - mean);
        result.error[i] = std::sqrt(factor * ss);
    }
    return result;
}

//---------------------------------------------------------------------------//
double integral(DensityTable const& table)
{
    double result = 0;
    for (double d : table.density)
        result += d * table.grid.width();
    return result + table.out_of_range_fraction;
}

//---------------------------------------------------------------------------//
void write_csv(std::ostream& os, DensityTable const& table, std::uint64_t seed)
{
    os << "bin_lo,bin_hi,density,stderr,charge,n_plus,n_minus\n";
    for (std::size_t i = 0; i < table.size(); ++i)
    {
        os << fmt(table.grid.edge(i)) << ',' << fmt(table.grid.edge(i + 1))
           << ',' << fmt(table.density[i]) << ',' << fmt(table.error[i]) << ','
           << fmt(table.charge[i]) << ',' << table.n_plus[i] << ','
           << table.n_minus[i] << '\n';
    }
    os << "# out_of_range_fraction=" << fmt(table.out_of_range_fraction) << '\n'
       << "# total_charge=" << fmt(table.total_charge) << '\n'
       << "# n_events=" << table.n_events << '\n'
       << "# seed=" << seed << '\n';
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
