//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/Error.hh
//---------------------------------------------------------------------------//
#pragma once

#include <stdexcept>
#include <string>

namespace signedchord
{
//---------------------------------------------------------------------------//
//! Failure categories; mirrored one-to-one by the C API status codes.
enum class ErrorCode
{
    invalid_argument = 1,
    config,
    io,
    unsupported_metrics,
    rejection_stall,
    zero_charge,
    edge_mismatch,
    empty_intersection,
    grid_too_coarse,
    unbounded_weight,
    nonconvex_unsupported,
    internal,
};

//---------------------------------------------------------------------------//
/*!
 * Exception carrying an error category.
 */
class Error : public std::runtime_error
{
  public:
    Error(ErrorCode code, std::string const& what)
        : std::runtime_error(what), code_(code)
    {
    }

    ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

// Human-readable name of an error category
char const* to_cstring(ErrorCode code);

//---------------------------------------------------------------------------//
}  // namespace signedchord
