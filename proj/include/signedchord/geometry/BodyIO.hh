//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/geometry/BodyIO.hh
//! \brief JSON body files
//---------------------------------------------------------------------------//
#pragma once

#include <string>

#include <json.hpp>

#include "Body.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
/*!
 * Read a CSG tree from JSON.
 *
 * Accepted node forms (exact key names):
 * \code
   {"sphere": {"center": [x, y, z], "radius": r}}
   {"box": {"min": [x, y, z], "max": [x, y, z]}}
   {"union": [node, ...]}
   {"intersection": [node, ...]}
   {"difference": [node, node]}
 * \endcode
 * The \c where argument prefixes error messages with the key path.
 */
Solid solid_from_json(nlohmann::json const& j, std::string const& where = "solid");

// Read {"solid": ..., "metrics": {...}?}
Body body_from_json(nlohmann::json const& j);

// Parse JSON text (errors report line/column via the parser)
Body body_from_string(std::string const& text);

// Load a body file
Body load_body(std::string const& path);

// Write a solid back out in the same format
nlohmann::json to_json(Solid const& s);

// Shared helpers for other file formats
nlohmann::json parse_json_text(std::string const& text, std::string const& what);
std::string read_text_file(std::string const& path);

//---------------------------------------------------------------------------//
}  // namespace signedchord
