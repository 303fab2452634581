//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file sampling/Sampling.cc
//---------------------------------------------------------------------------//
#include "signedchord/sampling/Sampling.hh"

#include <cmath>
#include <numbers>

#include "signedchord/Error.hh"

namespace signedchord
{
namespace
{
//---------------------------------------------------------------------------//
/*!
 * Two unit vectors completing an orthonormal basis with a unit normal.
 *
 * Uses the branchless construction of Duff et al. (2017).
 */
void orthonormal_basis(Vec3 n, Vec3& b1, Vec3& b2)
{
    double const sign = std::copysign(1.0, n.z);
    double const a = -1 / (sign + n.z);
    double const b = n.x * n.y * a;
    b1 = {1 + sign * n.x * n.x * a, sign * b, -sign * n.x};
    b2 = {b, sign + n.y * n.y * a, -n.y};
}

Vec3 uniform_in_box(RandomSource& rng, Box const& box)
{
    return {rng.uniform(box.lo.x, box.hi.x),
            rng.uniform(box.lo.y, box.hi.y),
            rng.uniform(box.lo.z, box.hi.z)};
}

double box_volume(Box const& box)
{
    Vec3 const d = box.hi - box.lo;
    return d.x * d.y * d.z;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
Vec3 sample_isotropic_direction(RandomSource& rng)
{
    double const cost = 2 * rng.uniform() - 1;
    double const phi = 2 * std::numbers::pi * rng.uniform();
    double const sint = std::sqrt(std::fmax(0.0, 1 - cost * cost));
    return {sint * std::cos(phi), sint * std::sin(phi), cost};
}

//---------------------------------------------------------------------------//
Vec3 sample_interior_point(RandomSource& rng, Body const& body)
{
    for (std::size_t i = 0; i < rejection_window; ++i)
    {
        Vec3 p = uniform_in_box(rng, body.box());
        if (body.contains(p))
            return p;
    }
    throw Error(ErrorCode::rejection_stall,
                "no interior point found in "
                    + std::to_string(rejection_window)
                    + " bounding-box draws");
}

//---------------------------------------------------------------------------//
/*!
 * The line passes through a point uniform on the disc of the bounding radius
 * centered on the bounding center and orthogonal to the direction. Its origin
 * is placed one radius before that disc so that the parameter interval
 * [0, 2R] spans the bounding sphere.
 */
Line sample_mu_line(RandomSource& rng, BoundingSphere const& bounds)
{
    if (!(bounds.radius > 0))
        throw Error(ErrorCode::invalid_argument, "bounding radius must be positive");
    Vec3 const dir = sample_isotropic_direction(rng);
    Vec3 u, v;
    orthonormal_basis(dir, u, v);
    double const rho = bounds.radius * std::sqrt(rng.uniform());
    double const psi = 2 * std::numbers::pi * rng.uniform();
    Vec3 const foot = bounds.center + rho * std::cos(psi) * u
                      + rho * std::sin(psi) * v;
    return {foot - bounds.radius * dir, dir};
}

//---------------------------------------------------------------------------//
Line sample_nu_ray(RandomSource& rng, Body const& body)
{
    Vec3 const origin = sample_interior_point(rng, body);
    return {origin, sample_isotropic_direction(rng)};
}

//---------------------------------------------------------------------------//
PointPair sample_point_pair(RandomSource& rng, Body const& body)
{
    PointPair result;
    result.r = sample_interior_point(rng, body);
    result.rp = sample_interior_point(rng, body);
    return result;
}

//---------------------------------------------------------------------------//
Estimate estimate_volume_mc(Body const& body, RandomSource& rng, std::size_t n)
{
    if (n == 0)
        throw Error(ErrorCode::invalid_argument, "volume estimate needs n >= 1");
    std::size_t hits = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        hits += body.contains(uniform_in_box(rng, body.box())) ? 1 : 0;
    }
    double const p = static_cast<double>(hits) / static_cast<double>(n);
    double const vbox = box_volume(body.box());
    return {p * vbox, vbox * std::sqrt(p * (1 - p) / static_cast<double>(n))};
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
