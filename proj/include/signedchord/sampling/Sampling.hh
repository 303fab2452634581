//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/sampling/Sampling.hh
//! \brief Random points, directions, lines and rays for a body
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>

#include "signedchord/Estimate.hh"
#include "signedchord/geometry/Body.hh"
#include "RandomSource.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
//! Two independent uniform interior points
struct PointPair
{
    Vec3 r;
    Vec3 rp;

    double distance() const { return signedchord::distance(r, rp); }
};

//! Consecutive rejections after which interior sampling gives up
inline constexpr std::size_t rejection_window = 1'000'000;

// Uniform direction on the unit sphere
Vec3 sample_isotropic_direction(RandomSource& rng);

// Uniform point inside the body by rejection from its bounding box
Vec3 sample_interior_point(RandomSource& rng, Body const& body);

// Isotropic uniform line meeting the given bounding sphere
Line sample_mu_line(RandomSource& rng, BoundingSphere const& bounds);

// Ray from a uniform interior point in an isotropic direction
Line sample_nu_ray(RandomSource& rng, Body const& body);

// Independent uniform interior points
PointPair sample_point_pair(RandomSource& rng, Body const& body);

// Hit fraction times bounding-box volume
Estimate estimate_volume_mc(Body const& body, RandomSource& rng, std::size_t n);

//---------------------------------------------------------------------------//
}  // namespace signedchord
