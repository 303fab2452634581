//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file estimators/Distances.cc
//---------------------------------------------------------------------------//
#include <cmath>
#include <numbers>

#include "signedchord/Error.hh"
#include "signedchord/estimators/Estimators.hh"
#include "signedchord/sampling/Sampling.hh"
#include "signedchord/signedhist/Jackknife.hh"

namespace signedchord
{
namespace
{
//---------------------------------------------------------------------------//
double shell_volume(HistogramGrid const& grid, std::size_t i)
{
    double const lo = grid.edge(i);
    double const hi = grid.edge(i + 1);
    return 4 * std::numbers::pi / 3 * (hi * hi * hi - lo * lo * lo);
}

//! Mean separation within bin i under the r^2 weight of a spherical shell
double shell_abscissa(HistogramGrid const& grid, std::size_t i)
{
    double const lo = grid.edge(i);
    double const hi = grid.edge(i + 1);
    return 0.75 * (std::pow(hi, 4) - std::pow(lo, 4))
           / (std::pow(hi, 3) - std::pow(lo, 3));
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
GammaTable gamma_from_histograms(std::vector<SignedHistogram> const& batches,
                                 std::vector<double> const& batch_pairs,
                                 double scale,
                                 double gamma0)
{
    if (batches.empty() || batches.size() != batch_pairs.size())
        throw Error(ErrorCode::internal, "batch histograms and counts mismatch");
    GammaTable table;
    table.grid = batches.front().grid();
    if (table.grid.lo < 0)
        throw Error(ErrorCode::invalid_argument, "distance grid must start at l >= 0");
    table.gamma0 = gamma0;

    SignedHistogram total = batches.front();
    for (std::size_t b = 1; b < batches.size(); ++b)
        total.merge(batches[b]);
    double pairs = 0;
    for (double p : batch_pairs)
        pairs += p;
    if (pairs <= 0)
        throw Error(ErrorCode::zero_charge, "no pairs were sampled");

    std::size_t const nbins = total.size();
    std::size_t const nb = batches.size();
    table.gamma.resize(nbins);
    table.error.assign(nbins, std::nan(""));
    table.replicas.assign(nb, std::vector<double>(nbins));
    for (std::size_t i = 0; i < nbins; ++i)
    {
        double const factor = scale / shell_volume(table.grid, i);
        table.gamma[i] = factor * total.charge(i) / pairs;
        for (std::size_t b = 0; b < nb; ++b)
        {
            table.replicas[b][i] = factor
                                   * (total.charge(i) - batches[b].charge(i))
                                   / (pairs - batch_pairs[b]);
        }
    }
    if (nb >= 2)
    {
        for (std::size_t i = 0; i < nbins; ++i)
        {
            double mean = 0;
            for (std::size_t b = 0; b < nb; ++b)
                mean += table.replicas[b][i];
            mean /= static_cast<double>(nb);
            double ss = 0;
            for (std::size_t b = 0; b < nb; ++b)
                ss += std::pow(table.replicas[b][i] - mean, 2);
            table.error[i] = std::sqrt(ss * static_cast<double>(nb - 1)
                                       / static_cast<double>(nb));
        }
    }
    else
    {
        table.replicas.clear();
    }
    return table;
}

//---------------------------------------------------------------------------//
/*!
 * Least-squares slope of gamma(l) = gamma0 + s l over the first \c nfit bins
 * with a nonzero value, using the r^2-weighted mean separation of each bin
 * as its abscissa and inverse-variance weights.
 */
Estimate gamma_slope_at_zero(GammaTable const& table, std::size_t nfit)
{
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < table.gamma.size() && idx.size() < nfit; ++i)
    {
        if (table.gamma[i] != 0)
            idx.push_back(i);
    }
    if (idx.size() < 2)
    {
        throw Error(ErrorCode::grid_too_coarse,
                    "too few populated bins to fit the slope at zero");
    }
    std::vector<double> x(idx.size()), w(idx.size());
    double sxx = 0;
    for (std::size_t n = 0; n < idx.size(); ++n)
    {
        x[n] = shell_abscissa(table.grid, idx[n]);
        double const err = table.error[idx[n]];
        w[n] = (std::isfinite(err) && err > 0) ? 1 / (err * err) : 1;
        sxx += w[n] * x[n] * x[n];
    }
    auto slope = [&](std::vector<double> const& g) {
        double sxy = 0;
        for (std::size_t n = 0; n < idx.size(); ++n)
            sxy += w[n] * x[n] * (g[idx[n]] - table.gamma0);
        return sxy / sxx;
    };

    Estimate result{slope(table.gamma), std::nan("")};
    std::size_t const nb = table.replicas.size();
    if (nb >= 2)
    {
        std::vector<double> theta(nb);
        double mean = 0;
        for (std::size_t b = 0; b < nb; ++b)
        {
            theta[b] = slope(table.replicas[b]);
            mean += theta[b];
        }
        mean /= static_cast<double>(nb);
        double ss = 0;
        for (double t : theta)
            ss += (t - mean) * (t - mean);
        result.error = std::sqrt(ss * static_cast<double>(nb - 1)
                                 / static_cast<double>(nb));
    }
    return result;
}

//---------------------------------------------------------------------------//
DistanceEstimate estimate_distances(Body const& body,
                                    BatchPlan const& plan,
                                    std::uint64_t n_pairs,
                                    HistogramGrid const& grid)
{
    validate(plan);
    validate(grid);
    if (n_pairs == 0)
        throw Error(ErrorCode::invalid_argument, "need at least one pair");
    double const volume = body.metrics().volume;

    struct Batch
    {
        SignedHistogram hist;
        double pairs{0};
        double sum_distance{0};
    };
    auto results = map_batches(plan, [&](std::size_t b, RandomSource& rng) {
        Batch out{SignedHistogram(grid)};
        std::uint64_t const quota = plan.quota(n_pairs, b);
        for (std::uint64_t i = 0; i < quota; ++i)
        {
            double const d = sample_point_pair(rng, body).distance();
            out.hist.add(d, 1);
            out.sum_distance += d;
        }
        out.pairs = static_cast<double>(quota);
        return out;
    });

    DistanceEstimate est;
    std::vector<double> sums;
    for (auto& r : results)
    {
        est.batches.push_back(std::move(r.hist));
        est.batch_pairs.push_back(r.pairs);
        sums.push_back(r.sum_distance);
    }
    est.eta = normalize(est.batches, est.batch_pairs);
    est.gamma = gamma_from_histograms(est.batches, est.batch_pairs, volume, 1.0);
    est.mean_distance = jackknife_ratio(sums, est.batch_pairs);
    return est;
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
