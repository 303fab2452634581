//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file nonuniform/DensityField.cc
//---------------------------------------------------------------------------//
#include "signedchord/nonuniform/DensityField.hh"

#include <algorithm>

#include <cmath>
#include <limits>

#include "signedchord/Error.hh"
#include "signedchord/geometry/BodyIO.hh"

namespace signedchord
{
namespace
{
//---------------------------------------------------------------------------//
//! Whether a convex solid contains a ball (up to a relative tolerance)
bool contains_ball(Solid const& s, BoundingSphere const& ball, double tol)
{
    switch (s.kind())
    {
        case Solid::Kind::sphere: {
            Sphere const& sph = s.as_sphere();
            return distance(sph.center, ball.center) + ball.radius
                   <= sph.radius + tol;
        }
        case Solid::Kind::box: {
            Box const& box = s.as_box();
            for (int ax = 0; ax < 3; ++ax)
            {
                if (ball.center[ax] - ball.radius < box.lo[ax] - tol
                    || ball.center[ax] + ball.radius > box.hi[ax] + tol)
                {
                    return false;
                }
            }
            return true;
        }
        case Solid::Kind::intersect:
            for (auto const& child : s.children())
            {
                if (!contains_ball(child, ball, tol))
                    return false;
            }
            return true;
        case Solid::Kind::unite:
            return s.children().size() == 1
                   && contains_ball(s.children()[0], ball, tol);
        case Solid::Kind::subtract:
            return false;
    }
    return false;
}

double primitive_volume(Solid const& s)
{
    return analytic_metrics(s)->volume;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
DensityField::DensityField(Solid hull, std::vector<DensityRegion> regions)
    : hull_(std::move(hull)), regions_(std::move(regions))
{
    if (!hull_.convex())
        throw Error(ErrorCode::config, "density hull must be convex");
    double const tol = hull_.tolerance();
    for (std::size_t i = 0; i < regions_.size(); ++i)
    {
        double const rho = regions_[i].rho;
        if (!(rho >= 0) || !std::isfinite(rho))
        {
            throw Error(ErrorCode::config,
                        "regions[" + std::to_string(i)
                            + "].rho must be finite and nonnegative");
        }
        if (!contains_ball(hull_.solid(), bounding_sphere(regions_[i].solid), tol))
        {
            throw Error(ErrorCode::config,
                        "regions[" + std::to_string(i)
                            + "] extends beyond the hull");
        }
    }
}

//---------------------------------------------------------------------------//
double DensityField::density(Vec3 p) const
{
    for (auto it = regions_.rbegin(); it != regions_.rend(); ++it)
    {
        if (contains(it->solid, p))
            return it->rho;
    }
    return 0;
}

//---------------------------------------------------------------------------//
/*!
 * Walk the regions from last to first; each one contributes only where no
 * later region already covers the line.
 */
std::vector<DensitySegment> DensityField::profile(Line const& line) const
{
    double const eps = hull_.tolerance();
    std::vector<DensitySegment> result;
    IntervalSet covered;
    for (auto it = regions_.rbegin(); it != regions_.rend(); ++it)
    {
        IntervalSet const mine = intersect_line(it->solid, line, eps);
        if (mine.empty())
            continue;
        IntervalSet const visible
            = interval_boolean(BoolOp::subtract, mine, covered, eps);
        for (Interval const& iv : visible.intervals())
            result.push_back({iv, it->rho});
        covered = interval_boolean(BoolOp::unite, covered, mine, eps);
    }
    std::sort(result.begin(), result.end(), [](auto const& x, auto const& y) {
        return x.interval.lo < y.interval.lo;
    });
    return result;
}

//---------------------------------------------------------------------------//
double DensityField::optical_length(Vec3 p, Vec3 q) const
{
    double const len = distance(p, q);
    if (!(len > 0))
        throw Error(ErrorCode::invalid_argument, "optical length needs p != q");
    Line const line{p, (q - p) / len};
    double sum = 0;
    for (DensitySegment const& s : this->profile(line))
    {
        double const lo = std::fmax(s.interval.lo, 0.0);
        double const hi = std::fmin(s.interval.hi, len);
        if (hi > lo)
            sum += s.rho * (hi - lo);
    }
    return sum;
}

//---------------------------------------------------------------------------//
double DensityField::optical_radius(Line const& ray) const
{
    double sum = 0;
    for (DensitySegment const& s : this->profile(ray))
    {
        double const lo = std::fmax(s.interval.lo, 0.0);
        if (s.interval.hi > lo)
            sum += s.rho * (s.interval.hi - lo);
    }
    return sum;
}

//---------------------------------------------------------------------------//
double DensityField::optical_chord(Line const& line) const
{
    double sum = 0;
    for (DensitySegment const& s : this->profile(line))
        sum += s.rho * s.interval.length();
    return sum;
}

//---------------------------------------------------------------------------//
/*!
 * Available for a single region, or when every region has analytic metrics
 * and is disjoint from the others' bounding spheres.
 */
std::optional<double> DensityField::analytic_mass() const
{
    auto const n = regions_.size();
    for (auto const& r : regions_)
    {
        if (!r.solid.is_primitive())
            return std::nullopt;
    }
    auto inside = [this](std::size_t a, std::size_t b) {
        return primitive_strictly_inside(regions_[a].solid, regions_[b].solid);
    };

    double mass = 0;
    for (std::size_t i = 0; i < n; ++i)
    {
        double visible = primitive_volume(regions_[i].solid);
        bool hidden = false;
        for (std::size_t k = i + 1; k < n && !hidden; ++k)
        {
            if (inside(i, k))
            {
                hidden = true;
            }
            else if (inside(k, i))
            {
                // Subtract only outermost later regions inside this one
                bool nested = false;
                for (std::size_t m = i + 1; m < n; ++m)
                {
                    if (m != k && inside(k, m) && inside(m, i))
                        nested = true;
                }
                if (!nested)
                    visible -= primitive_volume(regions_[k].solid);
            }
            else if (!primitives_separated(regions_[i].solid, regions_[k].solid))
            {
                return std::nullopt;
            }
        }
        if (!hidden)
            mass += regions_[i].rho * visible;
    }
    return mass;
}

//---------------------------------------------------------------------------//
DensityField field_from_json(nlohmann::json const& j)
{
    if (!j.is_object())
        throw Error(ErrorCode::config, "field: expected an object");
    auto hull_it = j.find("hull");
    if (hull_it == j.end())
        throw Error(ErrorCode::config, "field: missing key 'hull'");
    Solid hull = solid_from_json(*hull_it, "hull");

    auto reg_it = j.find("regions");
    if (reg_it == j.end() || !reg_it->is_array())
        throw Error(ErrorCode::config, "field: 'regions' must be an array");
    std::vector<DensityRegion> regions;
    for (std::size_t i = 0; i < reg_it->size(); ++i)
    {
        std::string const where = "regions[" + std::to_string(i) + "]";
        auto const& r = (*reg_it)[i];
        if (!r.is_object() || !r.contains("solid") || !r.contains("rho"))
            throw Error(ErrorCode::config, where + ": needs 'solid' and 'rho'");
        if (!r["rho"].is_number())
            throw Error(ErrorCode::config, where + ".rho: expected a number");
        regions.push_back(
            {solid_from_json(r["solid"], where + ".solid"), r["rho"].get<double>()});
    }
    return DensityField(std::move(hull), std::move(regions));
}

DensityField field_from_string(std::string const& text)
{
    return field_from_json(parse_json_text(text, "field JSON"));
}

DensityField load_field(std::string const& path)
{
    return field_from_json(parse_json_text(read_text_file(path), path));
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
