//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file paths/Paths.cc
//---------------------------------------------------------------------------//
#include "signedchord/paths/Paths.hh"

#include <algorithm>
#include <cmath>

#include "signedchord/Error.hh"
#include "signedchord/sampling/Sampling.hh"
#include "signedchord/signedhist/Jackknife.hh"

namespace signedchord
{
namespace
{
//---------------------------------------------------------------------------//
//! Isotropic uniform line hitting the body, with its in-body intervals
IntervalSet sample_hit(Body const& body, RandomSource& rng, Line& line)
{
    for (std::size_t misses = 0; misses <= rejection_window; ++misses)
    {
        line = sample_mu_line(rng, body.bounds());
        IntervalSet iv = body.intersect(line);
        if (!iv.empty())
            return iv;
    }
    throw Error(ErrorCode::rejection_stall, "isotropic lines keep missing the body");
}

//! Distance from an interior point to the boundary along a direction
double exit_distance(Body const& body, Vec3 p, Vec3 dir)
{
    IntervalSet const iv = body.intersect_ray({p, dir});
    return iv.empty() ? 0.0 : iv[0].hi;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
KinkPairReport kink_pair_check(Body const& body, BatchPlan const& plan, std::uint64_t n)
{
    if (!body.convex())
    {
        throw Error(ErrorCode::nonconvex_unsupported,
                    "kink pairing is checked on convex bodies");
    }
    struct Batch
    {
        std::uint64_t instances{0};
        std::uint64_t failures{0};
        double max_err{0};
    };
    double const tol = 1e-9;
    auto batches = map_batches(plan, [&](std::size_t b, RandomSource& rng) {
        Batch out;
        std::uint64_t const quota = plan.quota(n, b);
        while (out.instances < quota)
        {
            Line line;
            IntervalSet const iv = sample_hit(body, rng, line);
            Vec3 const a = line.at(iv[0].lo);
            Vec3 const f = line.at(iv[0].hi);
            Vec3 const kink = line.at(rng.uniform(iv[0].lo, iv[0].hi));
            Vec3 const dir = sample_isotropic_direction(rng);
            double const to_c = exit_distance(body, kink, dir);
            double const to_d = exit_distance(body, kink, -dir);
            Vec3 const c = kink + to_c * dir;
            Vec3 const d = kink - to_d * dir;

            double const ab = distance(a, kink);
            if (!(ab > 0) || !(to_c > 0) || !(to_d > 0))
                continue;  // kink on the surface
            ++out.instances;

            double const legs = ab + distance(kink, c) + distance(f, kink)
                                + distance(kink, d);
            double const chord_ab
                = body.intersect({a, (kink - a) / ab}).total_length();
            double const chord_bc = body.intersect({kink, dir}).total_length();
            double const err = std::fabs(legs - (chord_ab + chord_bc))
                               / (chord_ab + chord_bc);
            out.max_err = std::max(out.max_err, err);
            if (!(err <= tol))
                ++out.failures;
        }
        return out;
    });

    KinkPairReport report;
    report.tolerance = tol;
    for (auto const& b : batches)
    {
        report.instances += b.instances;
        report.failures += b.failures;
        report.max_relative_error = std::max(report.max_relative_error, b.max_err);
    }
    return report;
}

//---------------------------------------------------------------------------//
void validate(WalkConfig const& config)
{
    if (!(config.mean_free_path > 0))
        throw Error(ErrorCode::invalid_argument, "mean free path must be positive");
    if (config.max_steps < 1)
        throw Error(ErrorCode::invalid_argument, "max_steps must be >= 1");
}

//---------------------------------------------------------------------------//
PathRecord
simulate_entering_walk(Body const& body, WalkConfig const& config, RandomSource& rng)
{
    validate(config);
    bool const free_flight = std::isinf(config.mean_free_path);

    Line line;
    IntervalSet iv = sample_hit(body, rng, line);
    Vec3 pos = line.at(iv[0].lo);
    Vec3 dir = line.direction;
    iv = iv.rebased(iv[0].lo);

    PathRecord rec;
    if (config.record_vertices)
        rec.vertices.push_back(pos);

    for (std::uint64_t step = 0;; ++step)
    {
        if (step >= config.max_steps)
        {
            rec.truncated = true;
            break;
        }
        double flight = free_flight ? std::numeric_limits<double>::infinity()
                                    : rng.exponential(config.mean_free_path);
        bool scattered = false;
        double t_end = 0;
        for (Interval const& seg : iv.intervals())
        {
            double const lo = std::max(seg.lo, 0.0);
            double const len = seg.hi - lo;
            t_end = seg.hi;
            if (flight < len)
            {
                rec.in_body_length += flight;
                t_end = lo + flight;
                scattered = true;
                break;
            }
            flight -= len;
            rec.in_body_length += len;
        }
        pos = pos + t_end * dir;
        if (config.record_vertices)
            rec.vertices.push_back(pos);
        if (!scattered)
            break;

        ++rec.n_scatters;
        dir = sample_isotropic_direction(rng);
        iv = body.intersect_ray({pos, dir});
    }
    return rec;
}

//---------------------------------------------------------------------------//
std::vector<MeanPathRow> mean_path_report(Body const& body,
                                          std::vector<WalkConfig> const& configs,
                                          BatchPlan const& plan,
                                          std::uint64_t n)
{
    std::vector<MeanPathRow> rows;
    if (n == 0)
        return rows;
    double const reference = body.metrics().mean_chord();
    for (WalkConfig config : configs)
    {
        validate(config);
        config.record_vertices = false;
        auto sums = map_batches(plan, [&](std::size_t b, RandomSource& rng) {
            std::vector<double> s(4, 0.0);
            std::uint64_t const quota = plan.quota(n, b);
            for (std::uint64_t i = 0; i < quota; ++i)
            {
                PathRecord const rec = simulate_entering_walk(body, config, rng);
                s[0] += rec.in_body_length;
                s[2] += rec.truncated ? 1 : 0;
                s[3] += static_cast<double>(rec.n_scatters);
            }
            s[1] = static_cast<double>(quota);
            return s;
        });
        MeanPathRow row;
        row.mean_free_path = config.mean_free_path;
        row.walks = n;
        row.mean = jackknife(sums, [](std::span<double const> s) { return s[0] / s[1]; });
        row.reference = reference;
        double truncated = 0, scatters = 0;
        for (auto const& s : sums)
        {
            truncated += s[2];
            scatters += s[3];
        }
        row.truncated_fraction = truncated / static_cast<double>(n);
        row.mean_scatters = scatters / static_cast<double>(n);
        row.truncation_flagged = row.truncated_fraction > 1e-3;
        CheckRecord const c = check_sigma("mean_path", row.mean, reference);
        row.z = c.z;
        row.passed = c.passed && !row.truncation_flagged;
        row.advisory = !body.convex();
        rows.push_back(row);
    }
    return rows;
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
