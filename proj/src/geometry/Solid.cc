//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file geometry/Solid.cc
//---------------------------------------------------------------------------//
#include "signedchord/geometry/Solid.hh"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <variant>

#include "signedchord/Error.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
struct Solid::Node
{
    struct Csg
    {
        BoolOp op;
        std::vector<Solid> children;
    };

    std::variant<Sphere, Box, Csg> data;
};

//---------------------------------------------------------------------------//
Line make_line(Vec3 origin, Vec3 direction)
{
    if (!is_finite(origin) || !is_finite(direction))
    {
        throw Error(ErrorCode::invalid_argument, "line has non-finite data");
    }
    if (std::fabs(norm(direction) - 1) > 1e-12)
    {
        throw Error(ErrorCode::invalid_argument,
                    "line direction must be a unit vector");
    }
    return {origin, direction};
}

//---------------------------------------------------------------------------//
// CONSTRUCTION
//---------------------------------------------------------------------------//
Solid::Solid(std::shared_ptr<Node const> node) : node_(std::move(node)) {}

Solid Solid::sphere(Vec3 center, double radius)
{
    if (!is_finite(center) || !(radius > 0) || !std::isfinite(radius))
    {
        throw Error(ErrorCode::invalid_argument,
                    "sphere radius must be positive and finite");
    }
    return Solid{std::make_shared<Node const>(Node{Sphere{center, radius}})};
}

Solid Solid::box(Vec3 lo, Vec3 hi)
{
    if (!is_finite(lo) || !is_finite(hi) || !(lo.x < hi.x) || !(lo.y < hi.y)
        || !(lo.z < hi.z))
    {
        throw Error(ErrorCode::invalid_argument,
                    "box min must be below max in every component");
    }
    return Solid{std::make_shared<Node const>(Node{Box{lo, hi}})};
}

Solid Solid::unite(std::vector<Solid> children)
{
    if (children.empty())
    {
        throw Error(ErrorCode::invalid_argument, "union needs children");
    }
    return Solid{std::make_shared<Node const>(
        Node{Node::Csg{BoolOp::unite, std::move(children)}})};
}

Solid Solid::intersect(std::vector<Solid> children)
{
    if (children.empty())
    {
        throw Error(ErrorCode::invalid_argument, "intersection needs children");
    }
    return Solid{std::make_shared<Node const>(
        Node{Node::Csg{BoolOp::intersect, std::move(children)}})};
}

Solid Solid::subtract(Solid a, Solid b)
{
    std::vector<Solid> children{std::move(a), std::move(b)};
    return Solid{std::make_shared<Node const>(
        Node{Node::Csg{BoolOp::subtract, std::move(children)}})};
}

//---------------------------------------------------------------------------//
// ACCESSORS
//---------------------------------------------------------------------------//
Solid::Kind Solid::kind() const
{
    if (std::holds_alternative<Sphere>(node_->data))
        return Kind::sphere;
    if (std::holds_alternative<Box>(node_->data))
        return Kind::box;
    switch (std::get<Node::Csg>(node_->data).op)
    {
        case BoolOp::unite:
            return Kind::unite;
        case BoolOp::intersect:
            return Kind::intersect;
        case BoolOp::subtract:
            return Kind::subtract;
    }
    return Kind::unite;
}

Sphere const& Solid::as_sphere() const
{
    return std::get<Sphere>(node_->data);
}

Box const& Solid::as_box() const
{
    return std::get<Box>(node_->data);
}

std::span<Solid const> Solid::children() const
{
    if (auto const* csg = std::get_if<Node::Csg>(&node_->data))
        return csg->children;
    return {};
}

namespace
{
//---------------------------------------------------------------------------//
/*!
 * Sphere chord using the perpendicular-offset form of the discriminant.
 *
 * h^2 = r^2 - |f - (f.d) d|^2 avoids the b^2 - c cancellation that loses
 * precision for grazing lines far from the center.
 */
IntervalSet intersect_sphere(Sphere const& s, Line const& line, double eps)
{
    Vec3 const f = line.origin - s.center;
    double const b = dot(f, line.direction);
    Vec3 const perp = f - b * line.direction;
    double const h2 = s.radius * s.radius - dot(perp, perp);
    if (!(h2 > 0))
        return {};
    double const h = std::sqrt(h2);
    return IntervalSet::from_raw({{-b - h, -b + h}}, eps);
}

//---------------------------------------------------------------------------//
IntervalSet intersect_box(Box const& box, Line const& line, double eps)
{
    double tmin = -std::numeric_limits<double>::infinity();
    double tmax = std::numeric_limits<double>::infinity();
    for (int ax = 0; ax < 3; ++ax)
    {
        double const o = line.origin[ax];
        double const d = line.direction[ax];
        double const lo = box.lo[ax];
        double const hi = box.hi[ax];
        if (d == 0)
        {
            if (!(o > lo && o < hi))
                return {};
            continue;
        }
        double t0 = (lo - o) / d;
        double t1 = (hi - o) / d;
        if (t0 > t1)
            std::swap(t0, t1);
        tmin = std::max(tmin, t0);
        tmax = std::min(tmax, t1);
    }
    if (!(tmax > tmin))
        return {};
    return IntervalSet::from_raw({{tmin, tmax}}, eps);
}

//---------------------------------------------------------------------------//
BoundingSphere enclose(BoundingSphere const& a, BoundingSphere const& b)
{
    double const d = distance(a.center, b.center);
    if (d + b.radius <= a.radius)
        return a;
    if (d + a.radius <= b.radius)
        return b;
    double const r = (d + a.radius + b.radius) / 2;
    Vec3 const c = a.center + ((r - a.radius) / d) * (b.center - a.center);
    return {c, r};
}

BoundingSphere sphere_of_box(Box const& b)
{
    return {(b.lo + b.hi) / 2, distance(b.lo, b.hi) / 2};
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
// FREE FUNCTIONS
//---------------------------------------------------------------------------//
IntervalSet intersect_line(Solid const& s, Line const& line, double eps)
{
    switch (s.kind())
    {
        case Solid::Kind::sphere:
            return intersect_sphere(s.as_sphere(), line, eps);
        case Solid::Kind::box:
            return intersect_box(s.as_box(), line, eps);
        case Solid::Kind::unite:
        case Solid::Kind::intersect:
        case Solid::Kind::subtract: {
            auto children = s.children();
            BoolOp const op = s.kind() == Solid::Kind::unite ? BoolOp::unite
                              : s.kind() == Solid::Kind::intersect
                                  ? BoolOp::intersect
                                  : BoolOp::subtract;
            IntervalSet result = intersect_line(children.front(), line, eps);
            for (auto const& child : children.subspan(1))
            {
                if (result.empty() && op != BoolOp::unite)
                    break;
                result = interval_boolean(
                    op, result, intersect_line(child, line, eps), eps);
            }
            return result;
        }
    }
    return {};
}

//---------------------------------------------------------------------------//
bool contains(Solid const& s, Vec3 p)
{
    switch (s.kind())
    {
        case Solid::Kind::sphere: {
            auto const& sph = s.as_sphere();
            Vec3 const f = p - sph.center;
            return dot(f, f) < sph.radius * sph.radius;
        }
        case Solid::Kind::box: {
            auto const& b = s.as_box();
            return p.x > b.lo.x && p.x < b.hi.x && p.y > b.lo.y
                   && p.y < b.hi.y && p.z > b.lo.z && p.z < b.hi.z;
        }
        case Solid::Kind::unite:
            return std::any_of(s.children().begin(),
                               s.children().end(),
                               [p](Solid const& c) { return contains(c, p); });
        case Solid::Kind::intersect:
            return std::all_of(s.children().begin(),
                               s.children().end(),
                               [p](Solid const& c) { return contains(c, p); });
        case Solid::Kind::subtract:
            return contains(s.children()[0], p)
                   && !contains(s.children()[1], p);
    }
    return false;
}

//---------------------------------------------------------------------------//
Box bounding_box(Solid const& s)
{
    switch (s.kind())
    {
        case Solid::Kind::sphere: {
            auto const& sph = s.as_sphere();
            Vec3 const r{sph.radius, sph.radius, sph.radius};
            return {sph.center - r, sph.center + r};
        }
        case Solid::Kind::box:
            return s.as_box();
        case Solid::Kind::unite:
        case Solid::Kind::intersect: {
            bool const grow = s.kind() == Solid::Kind::unite;
            Box result = bounding_box(s.children().front());
            for (auto const& c : s.children().subspan(1))
            {
                Box const b = bounding_box(c);
                auto pick_lo = [grow](double x, double y) {
                    return grow ? std::min(x, y) : std::max(x, y);
                };
                auto pick_hi = [grow](double x, double y) {
                    return grow ? std::max(x, y) : std::min(x, y);
                };
                result.lo = {pick_lo(result.lo.x, b.lo.x),
                             pick_lo(result.lo.y, b.lo.y),
                             pick_lo(result.lo.z, b.lo.z)};
                result.hi = {pick_hi(result.hi.x, b.hi.x),
                             pick_hi(result.hi.y, b.hi.y),
                             pick_hi(result.hi.z, b.hi.z)};
            }
            return result;
        }
        case Solid::Kind::subtract:
            return bounding_box(s.children()[0]);
    }
    return {};
}

//---------------------------------------------------------------------------//
BoundingSphere bounding_sphere(Solid const& s)
{
    switch (s.kind())
    {
        case Solid::Kind::sphere:
            return {s.as_sphere().center, s.as_sphere().radius};
        case Solid::Kind::box:
            return sphere_of_box(s.as_box());
        case Solid::Kind::unite: {
            BoundingSphere result = bounding_sphere(s.children().front());
            for (auto const& c : s.children().subspan(1))
                result = enclose(result, bounding_sphere(c));
            BoundingSphere const alt = sphere_of_box(bounding_box(s));
            return alt.radius < result.radius ? alt : result;
        }
        case Solid::Kind::intersect: {
            BoundingSphere result = bounding_sphere(s.children().front());
            for (auto const& c : s.children().subspan(1))
            {
                BoundingSphere const b = bounding_sphere(c);
                if (b.radius < result.radius)
                    result = b;
            }
            Box const box = bounding_box(s);
            if (box.lo.x < box.hi.x && box.lo.y < box.hi.y
                && box.lo.z < box.hi.z)
            {
                BoundingSphere const alt = sphere_of_box(box);
                if (alt.radius < result.radius)
                    result = alt;
            }
            return result;
        }
        case Solid::Kind::subtract:
            return bounding_sphere(s.children()[0]);
    }
    return {};
}

//---------------------------------------------------------------------------//
bool is_convex(Solid const& s)
{
    switch (s.kind())
    {
        case Solid::Kind::sphere:
        case Solid::Kind::box:
            return true;
        case Solid::Kind::intersect:
            return std::all_of(s.children().begin(),
                               s.children().end(),
                               [](Solid const& c) { return is_convex(c); });
        case Solid::Kind::unite:
            return s.children().size() == 1 && is_convex(s.children()[0]);
        case Solid::Kind::subtract:
            return false;
    }
    return false;
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
