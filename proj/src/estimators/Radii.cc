//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file estimators/Radii.cc
//---------------------------------------------------------------------------//
#include <algorithm>
#include <cmath>

#include "signedchord/Error.hh"
#include "signedchord/estimators/Decompose.hh"
#include "signedchord/estimators/Estimators.hh"
#include "signedchord/sampling/Sampling.hh"
#include "signedchord/signedhist/Jackknife.hh"

namespace signedchord
{
namespace
{
//---------------------------------------------------------------------------//
RadiiTally run_batch(Body const& body,
                     RandomSource& rng,
                     std::uint64_t quota,
                     HistogramGrid const& grid)
{
    RadiiTally t(grid);
    while (t.rays < quota)
    {
        Line const ray = sample_nu_ray(rng, body);
        IntervalSet const iv = body.intersect_ray(ray);
        if (iv.empty() || iv[0].lo != 0)
        {
            // Origin within the tolerance of the surface
            ++t.rejected_rays;
            continue;
        }
        ++t.rays;
        RadiiDecomposition const dec = radii_decompose(iv);
        double signed_sum = 0;
        for (std::size_t k = 0; k < dec.radii.size(); ++k)
        {
            SignedRadius const& r = dec.radii[k];
            t.signed_hist.add(r.radius, r.sign);
            t.signed_moments.add(r.radius, r.sign);
            signed_sum += r.sign * r.radius;
            if (k == 0)
            {
                t.first.add(r.radius, 1);
            }
            else if (r.sign > 0)
            {
                t.positives.add(r.radius, 1);
                ++t.positive_count;
            }
            else
            {
                t.negatives.add(r.radius, 1);
                ++t.negative_count;
            }
        }
        t.one_segment.add(dec.osd_length, 1);
        t.one_segment_moments.add(dec.osd_length, 1);
        t.max_sum_identity_error
            = std::max(t.max_sum_identity_error,
                       std::fabs(signed_sum - dec.osd_length) / dec.osd_length);
    }
    return t;
}

template<class F>
DensityTable normalize_member(std::vector<RadiiTally> const& batches,
                              F member,
                              std::vector<double> const& totals)
{
    std::vector<SignedHistogram> hists;
    hists.reserve(batches.size());
    for (auto const& t : batches)
        hists.push_back(member(t));
    return normalize(hists, totals);
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
RadiiEstimate estimate_radii(Body const& body,
                             BatchPlan const& plan,
                             std::uint64_t n_rays,
                             HistogramGrid const& grid)
{
    validate(plan);
    validate(grid);
    if (n_rays == 0)
        throw Error(ErrorCode::invalid_argument, "need at least one ray");

    RadiiEstimate est;
    est.batches = map_batches(plan, [&](std::size_t b, RandomSource& rng) {
        return run_batch(body, rng, plan.quota(n_rays, b), grid);
    });

    std::vector<double> per_ray, pos, neg, signed1, one1;
    double total_signed_charge = 0;
    for (RadiiTally const& t : est.batches)
    {
        est.rays += t.rays;
        est.max_sum_identity_error
            = std::max(est.max_sum_identity_error, t.max_sum_identity_error);
        per_ray.push_back(static_cast<double>(t.rays));
        pos.push_back(static_cast<double>(t.positive_count));
        neg.push_back(static_cast<double>(t.negative_count));
        signed1.push_back(t.signed_moments.sum(1));
        one1.push_back(t.one_segment_moments.sum(1));
        total_signed_charge += t.signed_hist.total_charge();
    }

    est.iota_signed = normalize_member(
        est.batches, [](auto const& t) { return t.signed_hist; }, per_ray);
    est.iota_first = normalize_member(
        est.batches, [](auto const& t) { return t.first; }, per_ray);
    est.iota_positive = normalize_member(
        est.batches, [](auto const& t) { return t.positives; }, per_ray);
    est.iota_negative = normalize_member(
        est.batches, [](auto const& t) { return t.negatives; }, per_ray);
    est.iota_one = normalize_member(
        est.batches, [](auto const& t) { return t.one_segment; }, per_ray);

    est.integral_signed = total_signed_charge / static_cast<double>(est.rays);
    est.integral_positive = jackknife_ratio(pos, per_ray);
    est.integral_negative = jackknife_ratio(neg, per_ray);
    est.mean_signed = jackknife_ratio(signed1, per_ray);
    est.mean_one = jackknife_ratio(one1, per_ray);

    for (std::size_t i = 0; i < est.iota_signed.size(); ++i)
    {
        double const overlap = est.iota_first.density[i]
                               + est.iota_positive.density[i]
                               - est.iota_negative.density[i];
        if (i == 0 || overlap < est.min_overlap)
            est.min_overlap = overlap;
    }
    return est;
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
