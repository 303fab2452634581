//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/dirac/Dirac.hh
//! \brief Independent Monte Carlo routes to the Dirac chord functional
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "signedchord/Check.hh"
#include "signedchord/estimators/Estimators.hh"
#include "TestFunction.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
/*!
 * Value of D(phi) = (1/V) int int phi(|r'-r|) / (4 pi |r'-r|^2) dr dr'
 * obtained by one method.
 */
struct DiracEstimate
{
    std::string method;
    double value{0};
    double error{0};
    std::uint64_t n_samples{0};

    Estimate estimate() const { return {value, error}; }
};

//! Normalization constant used by the chord route
enum class EllMode
{
    cauchy,  //!< 4V/S from the body metrics
    fourth_moment,  //!< pi <l^4> / (3V) from the same chords
};

// V times the mean of phi(R) / (4 pi R^2) over uniform point pairs
DiracEstimate dirac_pairs(Body const& body,
                          TestFunction const& phi,
                          BatchPlan const& plan,
                          std::uint64_t n);

// Quadrature of gamma * phi, gamma constant on each bin
DiracEstimate dirac_gamma(GammaTable const& gamma, TestFunction const& phi);

// Mean over interior rays of the signed sum of Phi at the boundary radii
DiracEstimate dirac_radii(Body const& body,
                          TestFunction const& phi,
                          BatchPlan const& plan,
                          std::uint64_t n);

// Signed mean of Lambda(l) over chord decompositions divided by ell
DiracEstimate dirac_chords(Body const& body,
                           TestFunction const& phi,
                           BatchPlan const& plan,
                           std::uint64_t n,
                           EllMode ell = EllMode::cauchy);

//---------------------------------------------------------------------------//
struct DiracOptions
{
    std::vector<std::string> methods{"gamma", "radii", "chords", "pairs"};
    std::uint64_t samples{1'000'000};
    HistogramGrid grid{};  //!< distance grid for the gamma route
    EllMode ell{EllMode::cauchy};
};

struct DiracReport
{
    std::vector<DiracEstimate> estimates;
    std::vector<CheckRecord> checks;
    std::vector<std::string> skipped;  //!< methods not applicable, with reason
};

/*!
 * Run the requested methods and compare them pairwise.
 *
 * The pair route is skipped (and noted) for kernels whose pair weight is
 * unbounded. For phi = 4 pi x^2 every estimate is also compared with V.
 */
DiracReport cross_check(Body const& body,
                        TestFunction const& phi,
                        BatchPlan const& plan,
                        DiracOptions const& options);

//---------------------------------------------------------------------------//
}  // namespace signedchord
