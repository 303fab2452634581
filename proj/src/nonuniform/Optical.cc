//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file nonuniform/Optical.cc
//---------------------------------------------------------------------------//
#include "signedchord/nonuniform/Optical.hh"

#include <cmath>
#include <numbers>

#include "signedchord/Error.hh"
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
        throw Error(ErrorCode::invalid_argument, "need at least one sample");
}

//! Uniform hull point and isotropic ray: rho(r), w(r, Omega)
struct RadiusSample
{
    double rho{0};
    double w{0};
};

RadiusSample sample_radius(DensityField const& field, RandomSource& rng)
{
    Line const ray = sample_nu_ray(rng, field.hull());
    RadiusSample s;
    s.rho = field.density(ray.origin);
    if (s.rho > 0)
        s.w = field.optical_radius(ray);
    return s;
}

//! Optical chord of a random line that hits the hull
double sample_optical_chord(DensityField const& field, RandomSource& rng,
                            std::uint64_t& tried)
{
    std::size_t misses = 0;
    for (;;)
    {
        Line const line = sample_mu_line(rng, field.hull().bounds());
        ++tried;
        if (!field.hull().intersect(line).empty())
            return field.optical_chord(line);
        if (++misses > rejection_window)
        {
            throw Error(ErrorCode::rejection_stall,
                        "isotropic lines keep missing the hull");
        }
    }
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
MuTildeEstimate estimate_mu_tilde(DensityField const& field,
                                  BatchPlan const& plan,
                                  std::uint64_t n_lines,
                                  HistogramGrid const& grid)
{
    validate(plan);
    validate(grid);
    require_samples(n_lines);
    struct Batch
    {
        SignedHistogram hist;
        MomentAccumulator moments;
        std::uint64_t tried{0};
    };
    auto batches = map_batches(plan, [&](std::size_t b, RandomSource& rng) {
        Batch out{SignedHistogram(grid), {}, 0};
        std::uint64_t const quota = plan.quota(n_lines, b);
        for (std::uint64_t i = 0; i < quota; ++i)
        {
            double const w = sample_optical_chord(field, rng, out.tried);
            out.hist.add(w, 1);
            out.moments.add(w, 1);
        }
        return out;
    });

    MuTildeEstimate est;
    std::vector<double> counts;
    for (auto& b : batches)
    {
        est.lines_tried += b.tried;
        est.lines_hit += b.moments.n_plus() + b.moments.n_minus();
        counts.push_back(b.moments.total_charge());
        est.batches.push_back(std::move(b.hist));
        est.moments.push_back(b.moments);
    }
    est.mu_tilde = normalize(est.batches, counts);
    est.mean = moment(est.moments, 1);
    est.mean_square = moment(est.moments, 2);
    return est;
}

//---------------------------------------------------------------------------//
GEstimate estimate_G(DensityField const& field, BatchPlan const& plan, std::uint64_t n)
{
    validate(plan);
    require_samples(n);
    double const vhull = field.hull().metrics().volume;
    auto rows = map_batches(plan, [&](std::size_t b, RandomSource& rng) {
        double rho_w = 0, rho_sq = 0;
        std::uint64_t const quota = plan.quota(n, b);
        for (std::uint64_t i = 0; i < quota; ++i)
        {
            RadiusSample const s = sample_radius(field, rng);
            rho_w += s.rho * s.w;
            rho_sq += s.rho * s.rho;
        }
        return std::vector<double>{static_cast<double>(quota), rho_w, rho_sq};
    });
    using Span = std::span<double const>;
    GEstimate result;
    result.value = jackknife(rows, [vhull](Span s) { return vhull * s[1] / s[0]; });
    result.rho_squared_integral
        = jackknife(rows, [vhull](Span s) { return vhull * s[2] / s[0]; });
    bool const empty = result.rho_squared_integral.value == 0;
    result.normalized
        = empty ? Estimate{0, 0}
                : jackknife(rows, [](Span s) { return s[1] / s[2]; });
    return result;
}

//---------------------------------------------------------------------------//
/*!
 * Each batch draws its own hull points (for G and the left side) and its
 * own lines (for the optical chord moments), so the jackknife of the
 * difference accounts for the correlation through G.
 */
OpticalDiracReport dirac_optical(DensityField const& field,
                                 TestFunction const& phi,
                                 BatchPlan const& plan,
                                 std::uint64_t n)
{
    validate(plan);
    require_samples(n);
    double const vhull = field.hull().metrics().volume;
    enum : std::size_t
    {
        points,
        rho_w,
        rho_phi,
        lines,
        w_sq,
        w_lambda,
        size
    };
    auto rows = map_batches(plan, [&](std::size_t b, RandomSource& rng) {
        std::vector<double> row(size, 0.0);
        std::uint64_t const quota = plan.quota(n, b);
        for (std::uint64_t i = 0; i < quota; ++i)
        {
            RadiusSample const s = sample_radius(field, rng);
            row[rho_w] += s.rho * s.w;
            row[rho_phi] += s.rho * phi.antiderivative(s.w);
        }
        row[points] = static_cast<double>(quota);
        std::uint64_t tried = 0;
        for (std::uint64_t i = 0; i < quota; ++i)
        {
            double const w = sample_optical_chord(field, rng, tried);
            row[w_sq] += w * w;
            row[w_lambda] += phi.lambda(w);
        }
        row[lines] = static_cast<double>(quota);
        return row;
    });

    using Span = std::span<double const>;
    auto g = [vhull](Span s) { return vhull * s[rho_w] / s[points]; };
    auto lhs = [vhull](Span s) { return vhull * s[rho_phi] / s[points]; };
    auto c_tilde = [g](Span s) {
        return 2 * g(s) / (s[w_sq] / s[lines]);
    };
    auto rhs = [c_tilde](Span s) {
        return s[w_sq] > 0 ? c_tilde(s) * s[w_lambda] / s[lines] : 0.0;
    };

    OpticalDiracReport r;
    r.g = jackknife(rows, g);
    r.lhs = jackknife(rows, lhs);
    r.rhs = jackknife(rows, rhs);
    r.difference = jackknife(rows, [&](Span s) { return lhs(s) - rhs(s); });
    r.mean_square_w = jackknife(rows, [](Span s) { return s[w_sq] / s[lines]; });
    if (r.mean_square_w.value > 0)
        r.c_tilde = jackknife(rows, c_tilde);
    else
        r.c_tilde = {std::nan(""), std::nan("")};

    CheckRecord c = check_sigma("optical_dirac_lhs_minus_rhs", r.difference, 0.0);
    c.note = "V_hull E[rho Phi(w)] - (2G/<W^2>) E[Lambda(W)] for " + phi.to_string();
    r.checks.push_back(c);
    if (auto quarter = uniform_surface_quarter(field))
    {
        CheckRecord ct = check_relative("c_tilde_equals_S_over_4", r.c_tilde, *quarter, 0.02);
        ct.note = "uniform density: 2G/<W^2> -> S/4";
        r.checks.push_back(ct);
    }
    return r;
}

//---------------------------------------------------------------------------//
std::optional<double> uniform_surface_quarter(DensityField const& field)
{
    if (field.regions().size() != 1 || !(field.regions()[0].rho > 0))
        return std::nullopt;
    auto const m = analytic_metrics(field.regions()[0].solid);
    if (!m)
        return std::nullopt;
    return m->surface / 4;
}

//---------------------------------------------------------------------------//
/*!
 * Pairs are uniform in the hull with weight rho(r) rho(r'), so the
 * histogram estimates the raw autocorrelation int rho(r) rho(r + x) dr. Its
 * value at zero, int rho^2, comes from the same points. Since
 * 12 int x^2 gamma dx equals 3 M^2 / pi, the constant reduces to
 * |gamma'(0)| times (M / M_pairs)^2, but both factors are reported.
 */
B3Report check_B3(DensityField const& field, BatchPlan const& plan, B3Options const& options)
{
    validate(plan);
    require_samples(options.pairs);
    Body const& hull = field.hull();
    double const vhull = hull.metrics().volume;
    HistogramGrid const grid{0, 2 * hull.bounds().radius, options.bins};
    validate(grid);

    struct Batch
    {
        SignedHistogram hist;
        double pairs{0};
        double rho{0};
        double rho_sq{0};
    };
    auto batches = map_batches(plan, [&](std::size_t b, RandomSource& rng) {
        Batch out{SignedHistogram(grid)};
        std::uint64_t const quota = plan.quota(options.pairs, b);
        for (std::uint64_t i = 0; i < quota; ++i)
        {
            PointPair const pp = sample_point_pair(rng, hull);
            double const rho1 = field.density(pp.r);
            double const rho2 = field.density(pp.rp);
            out.rho += rho1 + rho2;
            out.rho_sq += rho1 * rho1 + rho2 * rho2;
            double const w = rho1 * rho2;
            if (w != 0)
                out.hist.add(pp.distance(), w);
        }
        out.pairs = static_cast<double>(quota);
        return out;
    });

    B3Report report;
    std::vector<SignedHistogram> hists;
    std::vector<double> pairs;
    std::vector<std::vector<double>> rows;
    for (auto const& b : batches)
    {
        hists.push_back(b.hist);
        pairs.push_back(b.pairs);
        rows.push_back({2 * b.pairs, b.rho, b.rho_sq});
    }
    using Span = std::span<double const>;
    Estimate const rho_sq_int
        = jackknife(rows, [vhull](Span s) { return vhull * s[2] / s[0]; });

    if (auto m = field.analytic_mass())
    {
        report.mass = {*m, 0};
        report.mass_analytic = true;
    }
    else
    {
        report.mass = jackknife(rows, [vhull](Span s) { return vhull * s[1] / s[0]; });
    }
    if (report.mass.value == 0 || rho_sq_int.value == 0)
    {
        report.degenerate = true;
        report.c_dot = report.slope0 = report.fourth_moment
            = {std::nan(""), std::nan("")};
        return report;
    }

    report.gamma = gamma_from_histograms(hists, pairs, vhull * vhull, rho_sq_int.value);
    report.slope0 = gamma_slope_at_zero(report.gamma, options.fit_bins);

    // 12 int x^2 gamma dx with gamma constant on each bin, per replica
    auto moment_integral = [&](std::vector<double> const& g) {
        double sum = 0;
        for (std::size_t i = 0; i < g.size(); ++i)
        {
            double const lo = grid.edge(i), hi = grid.edge(i + 1);
            sum += g[i] * (hi * hi * hi - lo * lo * lo) / 3;
        }
        return 12 * sum;
    };
    double const mass = report.mass.value;
    auto c_dot = [&](double integral, double slope) {
        double const l4 = integral / std::fabs(slope);
        return 3 * mass * mass / (std::numbers::pi * l4);
    };
    double const integral = moment_integral(report.gamma.gamma);
    report.fourth_moment.value = integral / std::fabs(report.slope0.value);
    report.c_dot.value = c_dot(integral, report.slope0.value);

    // Replica spread through both the integral and the slope fit
    std::size_t const nb = report.gamma.replicas.size();
    if (nb >= 2)
    {
        std::vector<double> l4(nb), cd(nb);
        for (std::size_t b = 0; b < nb; ++b)
        {
            GammaTable rep = report.gamma;
            rep.gamma = report.gamma.replicas[b];
            rep.replicas.clear();
            double const slope = gamma_slope_at_zero(rep, options.fit_bins).value;
            double const integ = moment_integral(rep.gamma);
            l4[b] = integ / std::fabs(slope);
            cd[b] = c_dot(integ, slope);
        }
        auto spread = [nb](std::vector<double> const& v) {
            double mean = 0;
            for (double x : v)
                mean += x;
            mean /= static_cast<double>(nb);
            double ss = 0;
            for (double x : v)
                ss += (x - mean) * (x - mean);
            return std::sqrt(ss * static_cast<double>(nb - 1) / static_cast<double>(nb));
        };
        report.fourth_moment.error = spread(l4);
        report.c_dot.error = std::hypot(
            spread(cd), report.c_dot.value * 2 * report.mass.error / mass);
    }

    if (auto quarter = uniform_surface_quarter(field))
    {
        double const rho = field.regions()[0].rho;
        CheckRecord c = check_relative(
            "c_dot_equals_rho2_S_over_4", report.c_dot, rho * rho * *quarter, 0.02);
        c.note = "uniform density: 3M^2/(pi <l^4>) -> rho^2 S/4";
        report.checks.push_back(c);
    }
    return report;
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
