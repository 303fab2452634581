//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file dirac/Dirac.cc
//---------------------------------------------------------------------------//
#include "signedchord/dirac/Dirac.hh"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "signedchord/Error.hh"
#include "signedchord/estimators/Decompose.hh"
#include "signedchord/sampling/Sampling.hh"
#include "signedchord/signedhist/Jackknife.hh"

namespace signedchord
{
namespace
{
//---------------------------------------------------------------------------//
void require_samples(std::uint64_t n)
{
    if (n == 0)
        throw Error(ErrorCode::invalid_argument, "Dirac estimate needs n >= 1");
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
DiracEstimate dirac_pairs(Body const& body,
                          TestFunction const& phi,
                          BatchPlan const& plan,
                          std::uint64_t n)
{
    require_samples(n);
    if (!phi.bounded_pair_weight())
    {
        throw Error(ErrorCode::unbounded_weight,
                    "pair estimator has infinite variance for "
                        + phi.to_string()
                        + " (phi(x)/x^2 is unbounded near zero)");
    }
    double const volume = body.metrics().volume;
    auto sums = map_batches(plan, [&](std::size_t b, RandomSource& rng) {
        double sum = 0;
        std::uint64_t const quota = plan.quota(n, b);
        for (std::uint64_t i = 0; i < quota; ++i)
        {
            double const r = sample_point_pair(rng, body).distance();
            if (r > 0)
                sum += phi(r) / (4 * std::numbers::pi * r * r);
        }
        return std::vector<double>{sum, static_cast<double>(quota)};
    });
    Estimate const e = jackknife(sums, [volume](std::span<double const> s) {
        return volume * s[0] / s[1];
    });
    return {"pairs", e.value, e.error, n};
}

//---------------------------------------------------------------------------//
/*!
 * Each tabulated value is the r^2-weighted bin average of gamma, so the
 * quadrature integrates phi exactly within each bin; it is exact for
 * phi = 4 pi x^2. Errors come from the delete-one-batch replicas.
 */
DiracEstimate dirac_gamma(GammaTable const& gamma, TestFunction const& phi)
{
    std::size_t const n = gamma.gamma.size();
    std::vector<double> w(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        w[i] = phi.antiderivative(gamma.grid.edge(i + 1))
               - phi.antiderivative(gamma.grid.edge(i));
    }
    auto integrate = [&](std::vector<double> const& g) {
        double sum = 0;
        for (std::size_t i = 0; i < n; ++i)
            sum += g[i] * w[i];
        return sum;
    };

    DiracEstimate result{"gamma", integrate(gamma.gamma), std::nan(""), 0};
    std::size_t const nb = gamma.replicas.size();
    if (nb >= 2)
    {
        std::vector<double> theta(nb);
        double mean = 0;
        for (std::size_t b = 0; b < nb; ++b)
        {
            theta[b] = integrate(gamma.replicas[b]);
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
DiracEstimate dirac_radii(Body const& body,
                          TestFunction const& phi,
                          BatchPlan const& plan,
                          std::uint64_t n)
{
    require_samples(n);
    auto sums = map_batches(plan, [&](std::size_t b, RandomSource& rng) {
        double sum = 0;
        std::uint64_t const quota = plan.quota(n, b);
        std::uint64_t rays = 0;
        while (rays < quota)
        {
            Line const ray = sample_nu_ray(rng, body);
            IntervalSet const iv = body.intersect_ray(ray);
            if (iv.empty() || iv[0].lo != 0)
                continue;
            ++rays;
            for (SignedRadius const& r : radii_decompose(iv).radii)
                sum += r.sign * phi.antiderivative(r.radius);
        }
        return std::vector<double>{sum, static_cast<double>(quota)};
    });
    Estimate const e = jackknife(
        sums, [](std::span<double const> s) { return s[0] / s[1]; });
    return {"radii", e.value, e.error, n};
}

//---------------------------------------------------------------------------//
DiracEstimate dirac_chords(Body const& body,
                           TestFunction const& phi,
                           BatchPlan const& plan,
                           std::uint64_t n,
                           EllMode ell)
{
    require_samples(n);
    BodyMetrics const metrics = body.metrics();
    auto sums = map_batches(plan, [&](std::size_t b, RandomSource& rng) {
        double charge = 0, sum = 0, sum4 = 0;
        std::uint64_t const quota = plan.quota(n, b);
        std::uint64_t hits = 0;
        std::size_t misses = 0;
        while (hits < quota)
        {
            IntervalSet const iv
                = body.intersect(sample_mu_line(rng, body.bounds()));
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
            ++hits;
            for (ChordPiece const& p : chord_decompose(iv).pieces)
            {
                charge += p.charge;
                sum += p.charge * phi.lambda(p.length);
                sum4 += p.charge * std::pow(p.length, 4);
            }
        }
        return std::vector<double>{sum, charge, sum4};
    });

    double const volume = metrics.volume;
    double const cauchy = metrics.mean_chord();
    Estimate const e = jackknife(sums, [&](std::span<double const> s) {
        double const ell_value = ell == EllMode::cauchy
                                     ? cauchy
                                     : std::numbers::pi * (s[2] / s[1])
                                           / (3 * volume);
        return (s[0] / s[1]) / ell_value;
    });
    return {ell == EllMode::cauchy ? "chords" : "chords_ell4", e.value, e.error, n};
}

//---------------------------------------------------------------------------//
DiracReport cross_check(Body const& body,
                        TestFunction const& phi,
                        BatchPlan const& plan,
                        DiracOptions const& options)
{
    DiracReport report;
    for (std::string const& m : options.methods)
    {
        if (m == "gamma")
        {
            auto const dist = estimate_distances(
                body, plan, options.samples, options.grid);
            DiracEstimate e = dirac_gamma(dist.gamma, phi);
            e.n_samples = options.samples;
            report.estimates.push_back(e);
        }
        else if (m == "radii")
        {
            report.estimates.push_back(
                dirac_radii(body, phi, plan, options.samples));
        }
        else if (m == "chords")
        {
            report.estimates.push_back(
                dirac_chords(body, phi, plan, options.samples, options.ell));
        }
        else if (m == "pairs")
        {
            if (!phi.bounded_pair_weight())
            {
                report.skipped.push_back("pairs: phi(x)/x^2 is unbounded near "
                                         "zero, so the pair estimator has "
                                         "infinite variance");
                continue;
            }
            report.estimates.push_back(
                dirac_pairs(body, phi, plan, options.samples));
        }
        else
        {
            throw Error(ErrorCode::config, "unknown Dirac method '" + m + "'");
        }
    }

    auto const& est = report.estimates;
    for (std::size_t i = 0; i < est.size(); ++i)
    {
        for (std::size_t j = i + 1; j < est.size(); ++j)
        {
            report.checks.push_back(check_agree(est[i].method + "_vs_" + est[j].method,
                                                est[i].estimate(),
                                                est[j].estimate()));
        }
    }
    if (phi.is_volume_kernel())
    {
        double const volume = body.metrics().volume;
        for (auto const& e : est)
        {
            report.checks.push_back(
                check_sigma(e.method + "_equals_volume", e.estimate(), volume));
        }
    }
    return report;
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
