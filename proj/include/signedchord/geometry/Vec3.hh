//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/geometry/Vec3.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>

namespace signedchord
{
//---------------------------------------------------------------------------//
//! Point or displacement in 3D space.
struct Vec3
{
    double x{0};
    double y{0};
    double z{0};

    constexpr double operator[](int i) const
    {
        return i == 0 ? x : (i == 1 ? y : z);
    }
};

constexpr Vec3 operator+(Vec3 a, Vec3 b)
{
    return {a.x + b.x, a.y + b.y, a.z + b.z};
}
constexpr Vec3 operator-(Vec3 a, Vec3 b)
{
    return {a.x - b.x, a.y - b.y, a.z - b.z};
}
constexpr Vec3 operator-(Vec3 a)
{
    return {-a.x, -a.y, -a.z};
}
constexpr Vec3 operator*(double s, Vec3 a)
{
    return {s * a.x, s * a.y, s * a.z};
}
constexpr Vec3 operator*(Vec3 a, double s)
{
    return s * a;
}
constexpr Vec3 operator/(Vec3 a, double s)
{
    return {a.x / s, a.y / s, a.z / s};
}
constexpr bool operator==(Vec3 a, Vec3 b)
{
    return a.x == b.x && a.y == b.y && a.z == b.z;
}

constexpr double dot(Vec3 a, Vec3 b)
{
    return a.x * b.x + a.y * b.y + a.z * b.z;
}

constexpr Vec3 cross(Vec3 a, Vec3 b)
{
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double norm(Vec3 a)
{
    return std::sqrt(dot(a, a));
}

inline double distance(Vec3 a, Vec3 b)
{
    return norm(b - a);
}

inline Vec3 normalized(Vec3 a)
{
    return a / norm(a);
}

inline bool is_finite(Vec3 a)
{
    return std::isfinite(a.x) && std::isfinite(a.y) && std::isfinite(a.z);
}

//---------------------------------------------------------------------------//
/*!
 * Directed line (or ray, when only t >= 0 is used): origin + t * direction.
 *
 * The direction is a unit vector.
 */
struct Line
{
    Vec3 origin;
    Vec3 direction;

    Vec3 at(double t) const { return origin + t * direction; }
};

// Construct a line, validating the direction is unit length within 1e-12
Line make_line(Vec3 origin, Vec3 direction);

//---------------------------------------------------------------------------//
}  // namespace signedchord
