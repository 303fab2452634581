//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file geometry/Body.cc
//---------------------------------------------------------------------------//
#include "signedchord/geometry/Body.hh"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "signedchord/Error.hh"

namespace signedchord
{
namespace
{
constexpr double pi = std::numbers::pi;

//---------------------------------------------------------------------------//
MetricsOverride primitive_metrics(Solid const& s)
{
    if (s.kind() == Solid::Kind::sphere)
    {
        double const r = s.as_sphere().radius;
        double const area = 4 * pi * r * r;
        return {4 * pi * r * r * r / 3, area, area};
    }
    Box const& b = s.as_box();
    Vec3 const w = b.hi - b.lo;
    double const area = 2 * (w.x * w.y + w.y * w.z + w.z * w.x);
    return {w.x * w.y * w.z, area, area};
}

//---------------------------------------------------------------------------//
// Distance from a point to an axis-aligned box (zero inside)
double box_distance(Box const& b, Vec3 p)
{
    auto axis = [](double lo, double hi, double x) {
        return std::max({lo - x, 0.0, x - hi});
    };
    return norm(Vec3{axis(b.lo.x, b.hi.x, p.x),
                     axis(b.lo.y, b.hi.y, p.y),
                     axis(b.lo.z, b.hi.z, p.z)});
}

//---------------------------------------------------------------------------//
bool primitives_disjoint(Solid const& a, Solid const& b)
{
    using K = Solid::Kind;
    if (a.kind() == K::sphere && b.kind() == K::sphere)
    {
        auto const& sa = a.as_sphere();
        auto const& sb = b.as_sphere();
        return distance(sa.center, sb.center) > sa.radius + sb.radius;
    }
    if (a.kind() == K::box && b.kind() == K::box)
    {
        auto const& ba = a.as_box();
        auto const& bb = b.as_box();
        for (int ax = 0; ax < 3; ++ax)
        {
            if (ba.hi[ax] < bb.lo[ax] || bb.hi[ax] < ba.lo[ax])
                return true;
        }
        return false;
    }
    auto const& sph = a.kind() == K::sphere ? a.as_sphere() : b.as_sphere();
    auto const& box = a.kind() == K::box ? a.as_box() : b.as_box();
    return box_distance(box, sph.center) > sph.radius;
}

//---------------------------------------------------------------------------//
// Whether primitive `inner` lies strictly inside primitive `outer`
bool strictly_inside(Solid const& inner, Solid const& outer)
{
    using K = Solid::Kind;
    if (inner.kind() == K::sphere)
    {
        auto const& s = inner.as_sphere();
        if (outer.kind() == K::sphere)
        {
            auto const& o = outer.as_sphere();
            return distance(s.center, o.center) + s.radius < o.radius;
        }
        auto const& o = outer.as_box();
        for (int ax = 0; ax < 3; ++ax)
        {
            if (!(s.center[ax] - s.radius > o.lo[ax]
                  && s.center[ax] + s.radius < o.hi[ax]))
            {
                return false;
            }
        }
        return true;
    }
    // Convex outer contains a box iff it contains all eight corners
    auto const& b = inner.as_box();
    for (int corner = 0; corner < 8; ++corner)
    {
        Vec3 const p{(corner & 1) ? b.hi.x : b.lo.x,
                     (corner & 2) ? b.hi.y : b.lo.y,
                     (corner & 4) ? b.hi.z : b.lo.z};
        if (!contains(outer, p))
            return false;
    }
    return true;
}

//---------------------------------------------------------------------------//
// Flatten a primitive or a union of primitives; false if anything else
bool collect_primitives(Solid const& s, std::vector<Solid>* out)
{
    if (s.is_primitive())
    {
        out->push_back(s);
        return true;
    }
    if (s.kind() != Solid::Kind::unite)
        return false;
    for (auto const& c : s.children())
    {
        if (!collect_primitives(c, out))
            return false;
    }
    return true;
}

bool pairwise_disjoint(std::vector<Solid> const& parts)
{
    for (std::size_t i = 0; i < parts.size(); ++i)
    {
        for (std::size_t j = i + 1; j < parts.size(); ++j)
        {
            if (!primitives_disjoint(parts[i], parts[j]))
                return false;
        }
    }
    return true;
}

//---------------------------------------------------------------------------//
// Primitive minus disjoint primitives strictly inside it
bool is_primitive_with_holes(Solid const& s)
{
    if (s.kind() != Solid::Kind::subtract)
        return false;
    Solid const& outer = s.children()[0];
    if (!outer.is_primitive())
        return false;
    std::vector<Solid> holes;
    if (!collect_primitives(s.children()[1], &holes))
        return false;
    return pairwise_disjoint(holes)
           && std::all_of(holes.begin(), holes.end(), [&](Solid const& h) {
                  return strictly_inside(h, outer);
              });
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
bool primitives_separated(Solid const& a, Solid const& b)
{
    if (!a.is_primitive() || !b.is_primitive())
        throw Error(ErrorCode::invalid_argument, "expected primitive solids");
    return primitives_disjoint(a, b);
}

bool primitive_strictly_inside(Solid const& inner, Solid const& outer)
{
    if (!inner.is_primitive() || !outer.is_primitive())
        throw Error(ErrorCode::invalid_argument, "expected primitive solids");
    return strictly_inside(inner, outer);
}

//---------------------------------------------------------------------------//
/*!
 * Closed-form metrics for: spheres, boxes, a primitive with disjoint
 * primitive holes strictly inside it, and disjoint unions of primitives.
 *
 * The hull surface is known when the convex hull is itself a primitive.
 */
std::optional<MetricsOverride> analytic_metrics(Solid const& s)
{
    if (s.is_primitive())
        return primitive_metrics(s);

    if (s.kind() == Solid::Kind::intersect && s.children().size() == 1)
        return analytic_metrics(s.children()[0]);

    if (is_primitive_with_holes(s))
    {
        MetricsOverride result = primitive_metrics(s.children()[0]);
        result.hull_surface = result.surface;
        std::vector<Solid> holes;
        collect_primitives(s.children()[1], &holes);
        for (auto const& h : holes)
        {
            MetricsOverride const hm = primitive_metrics(h);
            result.volume -= hm.volume;
            result.surface += hm.surface;
        }
        return result;
    }

    std::vector<Solid> parts;
    if (s.kind() == Solid::Kind::unite && collect_primitives(s, &parts)
        && pairwise_disjoint(parts))
    {
        MetricsOverride result;
        for (auto const& p : parts)
        {
            MetricsOverride const pm = primitive_metrics(p);
            result.volume += pm.volume;
            result.surface += pm.surface;
        }
        if (parts.size() == 1)
            result.hull_surface = result.surface;
        return result;
    }
    return std::nullopt;
}

//---------------------------------------------------------------------------//
Body::Body(Solid solid, std::optional<MetricsOverride> user)
    : solid_(std::move(solid))
    , bounds_(bounding_sphere(solid_))
    , box_(bounding_box(solid_))
    , eps_(1e-9 * bounds_.radius)
    , convex_(is_convex(solid_))
{
    hull_is_primitive_ = convex_ || is_primitive_with_holes(solid_);
    if (user)
    {
        if (!(user->volume > 0) || !(user->surface > 0))
        {
            throw Error(ErrorCode::config,
                        "metrics: volume and surface must be positive");
        }
        if (user->hull_surface && *user->hull_surface > user->surface)
        {
            throw Error(ErrorCode::config,
                        "metrics: hull_surface must not exceed surface");
        }
        metrics_ = user;
    }
    else
    {
        metrics_ = analytic_metrics(solid_);
    }
}

//---------------------------------------------------------------------------//
IntervalSet Body::intersect_ray(Line const& ray) const
{
    return this->intersect(ray).clipped(
        0, std::numeric_limits<double>::infinity(), eps_);
}

//---------------------------------------------------------------------------//
BodyMetrics Body::metrics() const
{
    if (!metrics_)
    {
        throw Error(ErrorCode::unsupported_metrics,
                    "body has no closed-form volume/surface; supply a "
                    "\"metrics\" block in the body file");
    }
    BodyMetrics result;
    result.volume = metrics_->volume;
    result.surface = metrics_->surface;
    result.hull_surface = metrics_->hull_surface;
    result.bounding_center = bounds_.center;
    result.bounding_radius = bounds_.radius;
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
