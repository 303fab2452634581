//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file estimators/Randomness.cc
//---------------------------------------------------------------------------//
#include <algorithm>
#include <cmath>

#include "signedchord/Error.hh"
#include "signedchord/estimators/Estimators.hh"
#include "signedchord/sampling/Sampling.hh"
#include "signedchord/signedhist/Jackknife.hh"

namespace signedchord
{
namespace
{
//---------------------------------------------------------------------------//
struct Batch
{
    Batch() = default;
    explicit Batch(HistogramGrid const& g)
        : mu(g), nu(g), lambda(g), nu_pred(g), lambda_pred(g)
    {
    }

    SignedHistogram mu;
    SignedHistogram nu;
    SignedHistogram lambda;
    SignedHistogram nu_pred;
    SignedHistogram lambda_pred;
    double count{0};
    double sum_l{0};
    double sum_l4{0};
};

//! Full chord length of a convex body along a line
double chord_length(Body const& body, Line const& line)
{
    return body.intersect(line).total_length();
}

template<class F>
DensityTable collect(std::vector<Batch> const& batches,
                     F member,
                     std::vector<double> const& totals)
{
    std::vector<SignedHistogram> hists;
    for (auto const& b : batches)
        hists.push_back(member(b));
    return normalize(hists, totals);
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
double fraction_within(DensityTable const& a, DensityTable const& b, double nsigma)
{
    // A bin with no events has a jackknife error of zero; allow at least the
    // density carried by one event
    double const events = std::max(std::fabs(a.total_charge), std::fabs(b.total_charge));
    double const quantum = events > 0 ? 1 / (events * a.grid.width()) : 0;

    std::size_t used = 0, within = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
    {
        if (a.charge[i] == 0 && b.charge[i] == 0)
            continue;
        ++used;
        double const ea = std::isfinite(a.error[i]) ? a.error[i] : 0;
        double const eb = std::isfinite(b.error[i]) ? b.error[i] : 0;
        double const sigma = std::max(std::hypot(ea, eb), quantum);
        if (std::fabs(a.density[i] - b.density[i]) <= nsigma * sigma)
            ++within;
    }
    return used ? static_cast<double>(within) / static_cast<double>(used) : 1.0;
}

//---------------------------------------------------------------------------//
RandomnessReport check_randomness_relations(Body const& body,
                                            BatchPlan const& plan,
                                            std::uint64_t n,
                                            HistogramGrid const& grid)
{
    if (!body.convex())
    {
        throw Error(ErrorCode::nonconvex_unsupported,
                    "line-measure relations are only checked for convex bodies");
    }
    validate(plan);
    validate(grid);
    if (n == 0)
        throw Error(ErrorCode::invalid_argument, "need at least one sample");

    auto batches = map_batches(plan, [&](std::size_t b, RandomSource& rng) {
        Batch out(grid);
        std::uint64_t const quota = plan.quota(n, b);
        while (out.count < static_cast<double>(quota))
        {
            double const l = chord_length(body, sample_mu_line(rng, body.bounds()));
            if (l == 0)
                continue;
            out.count += 1;
            out.mu.add(l, 1);
            out.nu_pred.add(l, l);
            out.lambda_pred.add(l, std::pow(l, 4));
            out.sum_l += l;
            out.sum_l4 += std::pow(l, 4);
        }
        for (std::uint64_t i = 0; i < quota; ++i)
        {
            Line const ray = sample_nu_ray(rng, body);
            out.nu.add(chord_length(body, ray), 1);
        }
        for (std::uint64_t i = 0; i < quota; ++i)
        {
            PointPair const pp = sample_point_pair(rng, body);
            double const d = pp.distance();
            if (d == 0)
            {
                --i;
                continue;
            }
            out.lambda.add(chord_length(body, {pp.r, (pp.rp - pp.r) / d}), 1);
        }
        return out;
    });

    std::vector<double> counts, sum_l, sum_l4;
    for (auto const& b : batches)
    {
        counts.push_back(b.count);
        sum_l.push_back(b.sum_l);
        sum_l4.push_back(b.sum_l4);
    }

    RandomnessReport report;
    report.mu = collect(batches, [](auto const& b) { return b.mu; }, counts);
    report.nu = collect(batches, [](auto const& b) { return b.nu; }, counts);
    report.lambda = collect(batches, [](auto const& b) { return b.lambda; }, counts);
    report.nu_predicted
        = collect(batches, [](auto const& b) { return b.nu_pred; }, sum_l);
    report.lambda_predicted
        = collect(batches, [](auto const& b) { return b.lambda_pred; }, sum_l4);
    report.fourth_moment = jackknife_ratio(sum_l4, counts);
    report.nu_bins_within = fraction_within(report.nu, report.nu_predicted);
    report.lambda_bins_within
        = fraction_within(report.lambda, report.lambda_predicted);

    CheckRecord nu = check_sigma(
        "nu_reweighting_bins_within_4sigma", {report.nu_bins_within, 0}, 1.0, 0, 0.01);
    CheckRecord lam = check_sigma("lambda_reweighting_bins_within_4sigma",
                                  {report.lambda_bins_within, 0},
                                  1.0,
                                  0,
                                  0.01);
    nu.note = lam.note = "fraction of bins where the density matches the reweighted "
                         "isotropic chord density; must be at least 0.99";
    report.checks = {nu, lam};
    if (body.has_metrics())
    {
        BodyMetrics const m = body.metrics();
        double const ref = 12 * m.volume * m.volume / (std::numbers::pi * m.surface);
        report.checks.push_back(check_relative(
            "fourth_moment_12V2_over_piS", report.fourth_moment, ref, 0.01));
    }
    return report;
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
