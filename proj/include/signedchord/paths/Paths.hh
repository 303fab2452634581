//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/paths/Paths.hh
//! \brief Kinked trajectories: symmetric kink pairs and scattering walks
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "signedchord/Check.hh"
#include "signedchord/geometry/Body.hh"
#include "signedchord/sampling/BatchPlan.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
/*!
 * Kink-pair bookkeeping over sampled instances.
 *
 * Each instance takes a chord A-F of an isotropic uniform line, a kink B
 * uniform on it, and a fresh isotropic direction from B that exits at C.
 * Reflecting the path A-B-C through B gives the partner F-B-D, where D is
 * the exit opposite to C. The four legs then add up to the two straight
 * chords through (A, B) and (B, C), which are computed independently.
 */
struct KinkPairReport
{
    std::uint64_t instances{0};
    std::uint64_t failures{0};
    double max_relative_error{0};
    double tolerance{1e-9};

    bool passed() const { return instances > 0 && failures == 0; }
};

KinkPairReport kink_pair_check(Body const& body, BatchPlan const& plan, std::uint64_t n);

//---------------------------------------------------------------------------//
struct WalkConfig
{
    double mean_free_path{std::numeric_limits<double>::infinity()};
    std::uint64_t max_steps{1'000'000};
    bool record_vertices{false};
};

//! Trajectory of one walk entering the body
struct PathRecord
{
    std::vector<Vec3> vertices;
    double in_body_length{0};
    std::uint64_t n_scatters{0};
    bool truncated{false};
};

// Throw invalid_argument unless the mean free path and step limit are positive
void validate(WalkConfig const& config);

/*!
 * Walk entering through the first crossing of an isotropic uniform line.
 *
 * Exponential flights are measured along in-body length: between
 * scatterings the walk moves straight, passing through any exterior gaps of
 * a nonconvex body without interacting, and stops when it leaves for good.
 */
PathRecord
simulate_entering_walk(Body const& body, WalkConfig const& config, RandomSource& rng);

//---------------------------------------------------------------------------//
struct MeanPathRow
{
    double mean_free_path{0};
    std::uint64_t walks{0};
    Estimate mean;
    double reference{0};
    double z{0};
    double truncated_fraction{0};
    double mean_scatters{0};
    bool passed{false};
    bool truncation_flagged{false};
    bool advisory{false};  //!< nonconvex body: reported, not asserted
};

// Mean in-body length per mean free path compared with 4V/S
std::vector<MeanPathRow> mean_path_report(Body const& body,
                                          std::vector<WalkConfig> const& configs,
                                          BatchPlan const& plan,
                                          std::uint64_t n);

//---------------------------------------------------------------------------//
}  // namespace signedchord
