//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file estimators/Chords.cc
//---------------------------------------------------------------------------//
#include <algorithm>
#include <cmath>
#include <numbers>

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
// Indices into the per-batch tally rows used for jackknife estimates
enum Tally : std::size_t
{
    tried,
    hit,
    charge,
    signed_sum,  // five entries, k = 0..4
    one_sum = signed_sum + 5,  // five entries
    tally_size = one_sum + 5,
};

ChordTally run_batch(Body const& body,
                     RandomSource& rng,
                     std::uint64_t quota,
                     HistogramGrid const& grid)
{
    ChordTally t(grid);
    std::size_t misses = 0;
    while (t.lines_hit < quota)
    {
        Line const line = sample_mu_line(rng, body.bounds());
        ++t.lines_tried;
        IntervalSet const iv = body.intersect(line);
        if (iv.empty())
        {
            if (++misses > rejection_window)
            {
                throw Error(ErrorCode::rejection_stall,
                            "isotropic lines keep missing the body");
            }
            continue;
        }
        misses = 0;
        ++t.lines_hit;

        ChordDecomposition const dec = chord_decompose(iv);
        double sum_sq = 0;
        for (ChordPiece const& p : dec.pieces)
        {
            t.signed_hist.accumulate(p.sample());
            t.signed_moments.accumulate(p.sample());
            sum_sq += p.charge * p.length * p.length;
            switch (p.term)
            {
                case ChordTerm::segment:
                    t.segments.add(p.length, 1);
                    t.segment_moments.add(p.length, 1);
                    break;
                case ChordTerm::pair_positive:
                    t.positives.add(p.length, 1);
                    break;
                case ChordTerm::pair_negative:
                    t.negatives.add(p.length, 1);
                    break;
            }
        }
        t.segments_count += dec.n_intervals;
        t.one_chord.add(dec.ocd_length, 1);
        t.one_chord_moments.add(dec.ocd_length, 1);

        double const ocd_sq = dec.ocd_length * dec.ocd_length;
        t.max_sq_identity_error = std::max(
            t.max_sq_identity_error, std::fabs(sum_sq - ocd_sq) / ocd_sq);
    }
    return t;
}

template<class F>
DensityTable normalize_member(std::vector<ChordTally> const& batches,
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
ChordEstimate estimate_chords(Body const& body,
                              BatchPlan const& plan,
                              std::uint64_t n_lines,
                              HistogramGrid const& grid)
{
    validate(plan);
    validate(grid);
    if (n_lines == 0)
        throw Error(ErrorCode::invalid_argument, "need at least one line");

    ChordEstimate est;
    est.batches = map_batches(plan, [&](std::size_t b, RandomSource& rng) {
        return run_batch(body, rng, plan.quota(n_lines, b), grid);
    });

    std::vector<double> per_line, per_charge;
    std::vector<std::vector<double>> rows;
    for (ChordTally const& t : est.batches)
    {
        est.lines_tried += t.lines_tried;
        est.lines_hit += t.lines_hit;
        est.total_charge += t.segments_count;
        est.max_sq_identity_error
            = std::max(est.max_sq_identity_error, t.max_sq_identity_error);
        per_line.push_back(static_cast<double>(t.lines_hit));
        per_charge.push_back(static_cast<double>(t.segments_count));

        std::vector<double> row(tally_size);
        row[tried] = static_cast<double>(t.lines_tried);
        row[hit] = static_cast<double>(t.lines_hit);
        row[charge] = static_cast<double>(t.segments_count);
        for (int k = 0; k <= 4; ++k)
        {
            row[signed_sum + k] = t.signed_moments.sum(k);
            row[one_sum + k] = t.one_chord_moments.sum(k);
        }
        rows.push_back(std::move(row));
    }

    est.mu_signed = normalize_member(
        est.batches, [](auto const& t) { return t.signed_hist; }, per_charge);
    est.mu_multi = normalize_member(
        est.batches, [](auto const& t) { return t.segments; }, per_charge);
    est.mu_one = normalize_member(
        est.batches, [](auto const& t) { return t.one_chord; }, per_line);
    est.mu_segments = normalize_member(
        est.batches, [](auto const& t) { return t.segments; }, per_line);
    est.mu_positive = normalize_member(
        est.batches, [](auto const& t) { return t.positives; }, per_line);
    est.mu_negative = normalize_member(
        est.batches, [](auto const& t) { return t.negatives; }, per_line);

    using Span = std::span<double const>;
    est.c_m = jackknife(rows, [](Span s) { return s[charge] / s[hit]; });
    for (std::size_t k = 0; k <= 4; ++k)
    {
        est.mean_signed[k] = jackknife(rows, [k](Span s) {
            return s[signed_sum + k] / s[signed_sum];
        });
        est.mean_one[k] = jackknife(
            rows, [k](Span s) { return s[one_sum + k] / s[hit]; });
    }
    est.ratio_first = jackknife(rows, [](Span s) {
        return (s[one_sum + 1] / s[hit]) / (s[signed_sum + 1] / s[signed_sum]);
    });
    est.ratio_second = jackknife(rows, [](Span s) {
        return (s[one_sum + 2] / s[hit]) / (s[signed_sum + 2] / s[signed_sum]);
    });
    {
        std::vector<double> num, den;
        for (auto const& t : est.batches)
        {
            num.push_back(t.segment_moments.sum(1));
            den.push_back(t.segment_moments.sum(0));
        }
        est.mean_multi = jackknife_ratio(num, den);
    }
    double const proj = 4 * std::numbers::pi * body.bounds().radius
                        * body.bounds().radius;
    est.surface_crofton
        = jackknife(rows, [proj](Span s) { return proj * s[charge] / s[tried]; });
    est.hull_surface_crofton
        = jackknife(rows, [proj](Span s) { return proj * s[hit] / s[tried]; });

    est.min_overlap = est.min_signed_density = 0;
    for (std::size_t i = 0; i < est.mu_signed.size(); ++i)
    {
        double const overlap = est.mu_segments.density[i]
                               + est.mu_positive.density[i]
                               - est.mu_negative.density[i];
        if (i == 0 || overlap < est.min_overlap)
            est.min_overlap = overlap;
        if (i == 0 || est.mu_signed.density[i] < est.min_signed_density)
            est.min_signed_density = est.mu_signed.density[i];
    }
    return est;
}

//---------------------------------------------------------------------------//
Estimate ell_from_fourth_moment(ChordEstimate const& est, double volume)
{
    std::vector<std::vector<double>> rows;
    for (auto const& t : est.batches)
        rows.push_back({t.signed_moments.sum(4), t.signed_moments.sum(0)});
    return jackknife(rows, [volume](std::span<double const> s) {
        return std::numbers::pi * (s[0] / s[1]) / (3 * volume);
    });
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
