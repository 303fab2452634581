//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/app/Commands.hh
//! \brief Batch commands producing JSON reports and CSV tables
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>
#include <json.hpp>

#include "signedchord/geometry/Body.hh"
#include "signedchord/nonuniform/DensityField.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
//! Default seed for every command
inline constexpr std::uint64_t default_seed = 20240917;

struct RunOptions
{
    std::uint64_t seed{default_seed};
    std::uint64_t samples{1'000'000};
    std::size_t bins{256};
    std::optional<double> range_lo;  //!< default 0
    std::optional<double> range_hi;  //!< default: bounding diameter
    std::size_t streams{64};
    std::size_t workers{1};
    std::string phi{"exp:1"};
    std::vector<std::string> methods{"gamma", "radii", "chords", "pairs"};
    std::string ell{"cauchy"};  //!< or "fourth-moment"
    std::vector<double> mfp{0.25, 0.5, 1, 2, 4};
    std::size_t window{7};
    std::string slope{"fit"};  //!< or "analytic"
    bool compare{false};  //!< signed-cld: also compare with decomposition
    std::uint64_t aux_samples{0};  //!< kink instances / B3 pairs; 0 = default
    double nsigma{4};
};

struct RunResult
{
    nlohmann::json report;
    std::string text;
    std::vector<std::pair<std::string, std::string>> tables;  //!< name, CSV
    bool passed{true};
};

//! Names of all commands
std::vector<std::string> const& command_names();

/*!
 * Run a command on a body or a density field.
 *
 * \c optical uses the field; every other command uses the body. Throws
 * \c Error on invalid input.
 */
RunResult run_command(std::string const& command,
                      Body const* body,
                      DensityField const* field,
                      RunOptions const& options);

// Serialize a report with a stable layout
std::string dump_report(nlohmann::json const& report);

//---------------------------------------------------------------------------//
}  // namespace signedchord
