//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/geometry/Body.hh
//---------------------------------------------------------------------------//
#pragma once

#include <optional>

#include "Solid.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
/*!
 * Integral-geometric metrics of a body.
 *
 * The hull surface S* is the surface area of the convex hull; it is only
 * known for analytic shapes whose hull is a primitive, or when supplied.
 */
struct BodyMetrics
{
    double volume{0};
    double surface{0};
    std::optional<double> hull_surface;
    Vec3 bounding_center;
    double bounding_radius{0};

    //! Cauchy mean chord length 4V/S
    double mean_chord() const { return 4 * volume / surface; }
};

//! User-supplied metrics for shapes without closed forms.
struct MetricsOverride
{
    double volume{0};
    double surface{0};
    std::optional<double> hull_surface;
};

// Closed-form volume/surface/hull surface, if the shape supports it
std::optional<MetricsOverride> analytic_metrics(Solid const& s);

// Conservative tests on two primitives (sphere or box)
bool primitives_separated(Solid const& a, Solid const& b);
bool primitive_strictly_inside(Solid const& inner, Solid const& outer);

//---------------------------------------------------------------------------//
/*!
 * A solid plus its intersection tolerance and (optional) supplied metrics.
 *
 * The tolerance is 1e-9 of the bounding radius: intervals and gaps shorter
 * than it are removed from every line query.
 */
class Body
{
  public:
    explicit Body(Solid solid, std::optional<MetricsOverride> user = {});

    Solid const& solid() const { return solid_; }
    BoundingSphere const& bounds() const { return bounds_; }
    Box const& box() const { return box_; }
    double tolerance() const { return eps_; }
    bool convex() const { return convex_; }

    // Intervals of the full (two-sided) line inside the body
    IntervalSet intersect(Line const& line) const
    {
        return intersect_line(solid_, line, eps_);
    }

    // Intervals of the ray t >= 0 inside the body
    IntervalSet intersect_ray(Line const& ray) const;

    bool contains(Vec3 p) const { return signedchord::contains(solid_, p); }

    // Analytic or user-supplied metrics; throws unsupported_metrics
    BodyMetrics metrics() const;

    // Whether metrics() will succeed
    bool has_metrics() const { return metrics_.has_value(); }

    // Whether the body is convex or a convex primitive with contained holes
    bool convex_with_convex_holes() const { return hull_is_primitive_; }

  private:
    Solid solid_;
    BoundingSphere bounds_;
    Box box_;
    double eps_{0};
    bool convex_{false};
    bool hull_is_primitive_{false};
    std::optional<MetricsOverride> metrics_;
};

//---------------------------------------------------------------------------//
}  // namespace signedchord
