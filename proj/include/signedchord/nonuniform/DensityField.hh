//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/nonuniform/DensityField.hh
//---------------------------------------------------------------------------//
#pragma once

#include <string>
#include <vector>
#include <json.hpp>

#include "signedchord/geometry/Body.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
struct DensityRegion
{
    Solid solid;
    double rho{0};
};

//! Stretch of a line with constant density
struct DensitySegment
{
    Interval interval;
    double rho{0};
};

//---------------------------------------------------------------------------//
/*!
 * Piecewise-constant density inside a convex hull.
 *
 * Regions are painted in order: where regions overlap, the later one wins.
 * Points outside every region have zero density. Every region must lie
 * within the hull.
 */
class DensityField
{
  public:
    DensityField(Solid hull, std::vector<DensityRegion> regions);

    Body const& hull() const { return hull_; }
    std::vector<DensityRegion> const& regions() const { return regions_; }

    // Density at a point
    double density(Vec3 p) const;

    // Constant-density pieces of a line (parameter range of the whole line)
    std::vector<DensitySegment> profile(Line const& line) const;

    // Integral of the density along the segment from p to q
    double optical_length(Vec3 p, Vec3 q) const;

    // Integral of the density along a ray from its origin to infinity
    double optical_radius(Line const& ray) const;

    // Integral of the density along the whole line
    double optical_chord(Line const& line) const;

    // Mass from analytic region volumes when available
    std::optional<double> analytic_mass() const;

  private:
    Body hull_;
    std::vector<DensityRegion> regions_;
};

// Build from {"hull": solid, "regions": [{"solid": solid, "rho": x}, ...]}
DensityField field_from_json(nlohmann::json const& j);
DensityField field_from_string(std::string const& text);
DensityField load_field(std::string const& path);

//---------------------------------------------------------------------------//
}  // namespace signedchord
