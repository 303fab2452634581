//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/geometry/Solid.hh
//! \brief Constructive solid geometry tree and its line queries
//---------------------------------------------------------------------------//
#pragma once

#include <memory>
#include <span>
#include <vector>

#include "IntervalSet.hh"
#include "Vec3.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
struct Sphere
{
    Vec3 center;
    double radius{0};
};

//! Axis-aligned box given by its minimum and maximum corners.
struct Box
{
    Vec3 lo;
    Vec3 hi;
};

//! Sphere enclosing a solid.
struct BoundingSphere
{
    Vec3 center;
    double radius{0};
};

//---------------------------------------------------------------------------//
/*!
 * Immutable CSG node: a primitive or a boolean combination of children.
 *
 * Solids are cheap to copy (shared immutable storage) and safe to read from
 * any number of threads. A difference node always has exactly two children,
 * the second subtracted from the first.
 */
class Solid
{
  public:
    enum class Kind
    {
        sphere,
        box,
        unite,
        intersect,
        subtract,
    };

    //// CONSTRUCTION ////

    static Solid sphere(Vec3 center, double radius);
    static Solid box(Vec3 lo, Vec3 hi);
    static Solid unite(std::vector<Solid> children);
    static Solid intersect(std::vector<Solid> children);
    static Solid subtract(Solid a, Solid b);

    //// ACCESSORS ////

    Kind kind() const;
    bool is_primitive() const
    {
        return kind() == Kind::sphere || kind() == Kind::box;
    }

    // Primitive data (the kind must match)
    Sphere const& as_sphere() const;
    Box const& as_box() const;

    // Children of a boolean node (empty for primitives)
    std::span<Solid const> children() const;

  private:
    struct Node;
    std::shared_ptr<Node const> node_;

    explicit Solid(std::shared_ptr<Node const> node);
};

//---------------------------------------------------------------------------//
// FREE FUNCTIONS
//---------------------------------------------------------------------------//

// All maximal parameter intervals of the line inside the solid
IntervalSet intersect_line(Solid const& s, Line const& line, double eps);

// Whether a point is strictly inside (boundary points may go either way)
bool contains(Solid const& s, Vec3 p);

// Conservative axis-aligned bounding box
Box bounding_box(Solid const& s);

// Conservative bounding sphere (exact for single spheres)
BoundingSphere bounding_sphere(Solid const& s);

// Whether the solid is provably convex (primitives and their intersections)
bool is_convex(Solid const& s);

//---------------------------------------------------------------------------//
}  // namespace signedchord
