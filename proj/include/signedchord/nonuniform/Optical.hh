//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/nonuniform/Optical.hh
//! \brief Optical chord distributions and Dirac analogues for density fields
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <vector>

#include "signedchord/Check.hh"
#include "signedchord/dirac/TestFunction.hh"
#include "signedchord/estimators/Estimators.hh"
#include "DensityField.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
/*!
 * Distribution of optical chord lengths W over isotropic uniform lines that
 * hit the hull, one event per line.
 */
struct MuTildeEstimate
{
    std::vector<SignedHistogram> batches;
    std::vector<MomentAccumulator> moments;
    DensityTable mu_tilde;
    std::uint64_t lines_hit{0};
    std::uint64_t lines_tried{0};
    Estimate mean;
    Estimate mean_square;
};

MuTildeEstimate estimate_mu_tilde(DensityField const& field,
                                  BatchPlan const& plan,
                                  std::uint64_t n_lines,
                                  HistogramGrid const& grid);

//---------------------------------------------------------------------------//
/*!
 * G = int int rho rho' / (4 pi |r'-r|^2) dr dr', estimated as V_hull times
 * the mean of rho(r) w(r, Omega) over uniform hull points and isotropic
 * directions, with w the optical length of the forward ray.
 *
 * \c normalized divides by int rho^2 dV, so that a uniform body gives the
 * integral of its autocorrelation normalized to one at zero.
 */
struct GEstimate
{
    Estimate value;
    Estimate normalized;
    Estimate rho_squared_integral;
};

GEstimate estimate_G(DensityField const& field, BatchPlan const& plan, std::uint64_t n);

//---------------------------------------------------------------------------//
/*!
 * Both sides of the optical Dirac relation
 * V_hull E[rho Phi(w)] = (2 G / <W^2>) E[Lambda(W)].
 */
struct OpticalDiracReport
{
    Estimate lhs;
    Estimate rhs;
    Estimate difference;
    Estimate g;
    Estimate c_tilde;  //!< 2 G / <W^2>
    Estimate mean_square_w;
    std::vector<CheckRecord> checks;
};

OpticalDiracReport dirac_optical(DensityField const& field,
                                 TestFunction const& phi,
                                 BatchPlan const& plan,
                                 std::uint64_t n);

//---------------------------------------------------------------------------//
/*!
 * Constant 3 M^2 / (pi <l^4>) from the mass-weighted pair-distance
 * distribution, with <l^4> = 12 int x^2 gamma dx / |gamma'(0)|.
 */
struct B3Report
{
    bool degenerate{false};
    Estimate mass;
    bool mass_analytic{false};
    Estimate slope0;
    Estimate fourth_moment;
    Estimate c_dot;
    GammaTable gamma;
    std::vector<CheckRecord> checks;
};

struct B3Options
{
    std::uint64_t pairs{20'000'000};
    std::size_t bins{32};
    std::size_t fit_bins{5};
};

B3Report check_B3(DensityField const& field, BatchPlan const& plan, B3Options const& options);

// S/4 of the only region when the field is one region with analytic metrics
std::optional<double> uniform_surface_quarter(DensityField const& field);

//---------------------------------------------------------------------------//
}  // namespace signedchord
