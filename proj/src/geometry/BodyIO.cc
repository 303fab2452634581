//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file geometry/BodyIO.cc
//---------------------------------------------------------------------------//
#include "signedchord/geometry/BodyIO.hh"

#include <fstream>
#include <sstream>

#include "signedchord/Error.hh"

namespace signedchord
{
namespace
{
//---------------------------------------------------------------------------//
[[noreturn]] void config_error(std::string const& where, std::string const& msg)
{
    throw Error(ErrorCode::config, where + ": " + msg);
}

nlohmann::json const&
require(nlohmann::json const& obj, char const* key, std::string const& where)
{
    if (!obj.is_object())
        config_error(where, "expected an object");
    auto iter = obj.find(key);
    if (iter == obj.end())
        config_error(where, std::string("missing key '") + key + "'");
    return *iter;
}

double read_number(nlohmann::json const& j, std::string const& where)
{
    if (!j.is_number())
        config_error(where, "expected a number");
    return j.get<double>();
}

Vec3 read_vec3(nlohmann::json const& j, std::string const& where)
{
    if (!j.is_array() || j.size() != 3)
        config_error(where, "expected an array of three numbers");
    return {read_number(j[0], where + "[0]"),
            read_number(j[1], where + "[1]"),
            read_number(j[2], where + "[2]")};
}

std::vector<Solid>
read_children(nlohmann::json const& j, std::string const& where)
{
    if (!j.is_array() || j.empty())
        config_error(where, "expected a nonempty array of solids");
    std::vector<Solid> result;
    for (std::size_t i = 0; i < j.size(); ++i)
    {
        result.push_back(
            solid_from_json(j[i], where + "[" + std::to_string(i) + "]"));
    }
    return result;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
Solid solid_from_json(nlohmann::json const& j, std::string const& where)
{
    if (!j.is_object() || j.size() != 1)
    {
        config_error(where,
                     "expected an object with exactly one of 'sphere', 'box', "
                     "'union', 'intersection', 'difference'");
    }
    auto const iter = j.begin();
    std::string const key = iter.key();
    nlohmann::json const& value = iter.value();
    std::string const here = where + "." + key;
    try
    {
        if (key == "sphere")
        {
            return Solid::sphere(
                read_vec3(require(value, "center", here), here + ".center"),
                read_number(require(value, "radius", here), here + ".radius"));
        }
        if (key == "box")
        {
            return Solid::box(
                read_vec3(require(value, "min", here), here + ".min"),
                read_vec3(require(value, "max", here), here + ".max"));
        }
        if (key == "union")
            return Solid::unite(read_children(value, here));
        if (key == "intersection")
            return Solid::intersect(read_children(value, here));
        if (key == "difference")
        {
            auto children = read_children(value, here);
            if (children.size() != 2)
                config_error(here, "difference takes exactly two solids");
            return Solid::subtract(children[0], children[1]);
        }
    }
    catch (Error const& e)
    {
        if (e.code() == ErrorCode::invalid_argument)
            config_error(here, e.what());
        throw;
    }
    config_error(where, "unknown solid kind '" + key + "'");
}

//---------------------------------------------------------------------------//
Body body_from_json(nlohmann::json const& j)
{
    Solid solid = solid_from_json(require(j, "solid", "body"), "solid");
    std::optional<MetricsOverride> user;
    if (auto iter = j.find("metrics"); iter != j.end() && !iter->is_null())
    {
        MetricsOverride m;
        m.volume = read_number(require(*iter, "volume", "metrics"),
                               "metrics.volume");
        m.surface = read_number(require(*iter, "surface", "metrics"),
                                "metrics.surface");
        if (auto h = iter->find("hull_surface");
            h != iter->end() && !h->is_null())
        {
            m.hull_surface = read_number(*h, "metrics.hull_surface");
        }
        user = m;
    }
    return Body{std::move(solid), user};
}

//---------------------------------------------------------------------------//
nlohmann::json parse_json_text(std::string const& text, std::string const& what)
{
    try
    {
        return nlohmann::json::parse(text);
    }
    catch (nlohmann::json::parse_error const& e)
    {
        throw Error(ErrorCode::config, what + ": " + e.what());
    }
}

std::string read_text_file(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw Error(ErrorCode::io, "cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Body body_from_string(std::string const& text)
{
    return body_from_json(parse_json_text(text, "body JSON"));
}

Body load_body(std::string const& path)
{
    return body_from_json(parse_json_text(read_text_file(path), path));
}

//---------------------------------------------------------------------------//
nlohmann::json to_json(Solid const& s)
{
    auto vec = [](Vec3 v) { return nlohmann::json::array({v.x, v.y, v.z}); };
    auto kids = [&s] {
        auto arr = nlohmann::json::array();
        for (auto const& c : s.children())
            arr.push_back(to_json(c));
        return arr;
    };
    switch (s.kind())
    {
        case Solid::Kind::sphere:
            return {{"sphere",
                     {{"center", vec(s.as_sphere().center)},
                      {"radius", s.as_sphere().radius}}}};
        case Solid::Kind::box:
            return {{"box",
                     {{"min", vec(s.as_box().lo)}, {"max", vec(s.as_box().hi)}}}};
        case Solid::Kind::unite:
            return {{"union", kids()}};
        case Solid::Kind::intersect:
            return {{"intersection", kids()}};
        case Solid::Kind::subtract:
            return {{"difference", kids()}};
    }
    return {};
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
