//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file estimators/SignedCld.cc
//---------------------------------------------------------------------------//
#include <cmath>

#include "signedchord/Error.hh"
#include "signedchord/estimators/Estimators.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
/*!
 * The window is centered on point i when possible and shifted inward near
 * the ends. A quadratic fit's second derivative is constant over the window
 * and equals twice the coefficient of the component of x^2 orthogonal to 1
 * and x, so the weights follow from that orthogonal polynomial.
 */
std::vector<double> savgol_second_derivative(std::size_t npoints,
                                             std::size_t window,
                                             std::size_t i,
                                             std::size_t& first)
{
    if (window < 3 || window % 2 == 0 || window > npoints)
    {
        throw Error(ErrorCode::invalid_argument,
                    "smoothing window must be odd, at least 3, and fit the grid");
    }
    std::size_t const half = window / 2;
    first = (i < half) ? 0 : i - half;
    if (first + window > npoints)
        first = npoints - window;

    std::vector<double> x(window);
    double mx = 0;
    for (std::size_t j = 0; j < window; ++j)
    {
        x[j] = static_cast<double>(first + j) - static_cast<double>(i);
        mx += x[j];
    }
    mx /= static_cast<double>(window);

    // p1 = x - mx; p2 = x^2 - a p1 - c with <p2, 1> = <p2, p1> = 0
    double s11 = 0, sx2p1 = 0, mx2 = 0;
    for (double xj : x)
    {
        double const p1 = xj - mx;
        s11 += p1 * p1;
        sx2p1 += xj * xj * p1;
        mx2 += xj * xj;
    }
    mx2 /= static_cast<double>(window);
    double const a = sx2p1 / s11;
    std::vector<double> p2(window);
    double s22 = 0;
    for (std::size_t j = 0; j < window; ++j)
    {
        p2[j] = x[j] * x[j] - a * (x[j] - mx) - mx2;
        s22 += p2[j] * p2[j];
    }
    for (auto& p : p2)
        p *= 2 / s22;
    return p2;
}

//---------------------------------------------------------------------------//
SignedCldTable signed_cld_from_gamma(GammaTable const& table,
                                     std::size_t window,
                                     std::optional<double> slope0)
{
    std::size_t const n = table.gamma.size();
    if (n < 8)
    {
        throw Error(ErrorCode::grid_too_coarse,
                    "second derivative needs at least 8 grid points");
    }
    SignedCldTable result;
    result.grid = table.grid;
    result.window = window;
    result.slope0 = slope0 ? Estimate{*slope0, 0} : gamma_slope_at_zero(table);
    double const h = table.grid.width();
    double const norm = std::fabs(result.slope0.value);
    if (!(norm > 0))
        throw Error(ErrorCode::invalid_argument, "slope of gamma at zero vanishes");

    std::vector<std::vector<double>> weights(n);
    std::vector<std::size_t> firsts(n);
    for (std::size_t i = 0; i < n; ++i)
        weights[i] = savgol_second_derivative(n, window, i, firsts[i]);

    auto curvature = [&](std::vector<double> const& g, std::size_t i) {
        double sum = 0;
        for (std::size_t j = 0; j < window; ++j)
            sum += weights[i][j] * g[firsts[i] + j];
        return sum / (h * h);
    };

    result.values.resize(n);
    result.error.assign(n, std::nan(""));
    for (std::size_t i = 0; i < n; ++i)
        result.values[i] = curvature(table.gamma, i) / norm;

    std::size_t const nb = table.replicas.size();
    if (nb >= 2)
    {
        // Replica slopes reuse the fit with each delete-one table
        std::vector<double> replica_norm(nb, norm);
        if (!slope0)
        {
            for (std::size_t b = 0; b < nb; ++b)
            {
                GammaTable rep = table;
                rep.gamma = table.replicas[b];
                rep.replicas.clear();
                replica_norm[b] = std::fabs(gamma_slope_at_zero(rep).value);
            }
        }
        double const factor = static_cast<double>(nb - 1) / static_cast<double>(nb);
        std::vector<double> theta(nb);
        for (std::size_t i = 0; i < n; ++i)
        {
            double mean = 0;
            for (std::size_t b = 0; b < nb; ++b)
            {
                theta[b] = curvature(table.replicas[b], i) / replica_norm[b];
                mean += theta[b];
            }
            mean /= static_cast<double>(nb);
            double ss = 0;
            for (double t : theta)
                ss += (t - mean) * (t - mean);
            result.error[i] = std::sqrt(factor * ss);
        }
    }
    else
    {
        double const rel = std::isfinite(result.slope0.error)
                               ? result.slope0.error / norm
                               : 0;
        for (std::size_t i = 0; i < n; ++i)
        {
            double var = 0;
            for (std::size_t j = 0; j < window; ++j)
            {
                double const e = table.error[firsts[i] + j];
                if (std::isfinite(e))
                    var += std::pow(weights[i][j] * e / (h * h), 2);
            }
            result.error[i] = std::sqrt(var / (norm * norm)
                                        + std::pow(result.values[i] * rel, 2));
        }
    }
    return result;
}

//---------------------------------------------------------------------------//
/*!
 * For a density that is constant on each bin the inner integral has a
 * closed form; out-of-range charge is ignored.
 */
std::vector<double> gamma_from_density(DensityTable const& mu,
                                       double ell,
                                       std::vector<double> const& at)
{
    std::vector<double> result;
    result.reserve(at.size());
    for (double l : at)
    {
        double sum = 0;
        for (std::size_t i = 0; i < mu.size(); ++i)
        {
            double const a = mu.grid.edge(i);
            double const b = mu.grid.edge(i + 1);
            if (b <= l)
                continue;
            if (a >= l)
                sum += mu.density[i] * ((b * b - a * a) / 2 - l * (b - a));
            else
                sum += mu.density[i] * (b - l) * (b - l) / 2;
        }
        result.push_back(sum / ell);
    }
    return result;
}

//---------------------------------------------------------------------------//
SignedCldComparison compare_signed_cld(SignedCldTable const& cld,
                                       DensityTable const& mu,
                                       double nsigma)
{
    if (!(cld.grid == mu.grid))
        throw Error(ErrorCode::edge_mismatch, "comparison needs identical grids");
    std::size_t const n = mu.size();
    std::vector<double> centers(n);
    for (std::size_t i = 0; i < n; ++i)
        centers[i] = mu.grid.center(i);
    std::vector<double> const implied = gamma_from_density(mu, 1.0, centers);
    double const h = mu.grid.width();

    SignedCldComparison result;
    result.bias.resize(n);
    result.tolerance.resize(n);
    result.within.resize(n);
    for (std::size_t i = 0; i < n; ++i)
    {
        std::size_t first = 0;
        auto const w = savgol_second_derivative(n, cld.window, i, first);
        double smoothed = 0;
        for (std::size_t j = 0; j < w.size(); ++j)
            smoothed += w[j] * implied[first + j];
        smoothed /= h * h;
        result.bias[i] = std::fabs(smoothed - mu.density[i]);

        double const e1 = std::isfinite(cld.error[i]) ? cld.error[i] : 0;
        double const e2 = std::isfinite(mu.error[i]) ? mu.error[i] : 0;
        result.tolerance[i] = nsigma * std::hypot(e1, e2) + result.bias[i];
        result.within[i] = std::fabs(cld.values[i] - mu.density[i])
                           <= result.tolerance[i];
        if (mu.n_plus[i] + mu.n_minus[i] == 0 && cld.values[i] == 0)
            continue;
        ++result.bins_used;
        if (result.within[i])
            ++result.bins_within;
    }
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
