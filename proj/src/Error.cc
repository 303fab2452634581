//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Error.cc
//---------------------------------------------------------------------------//
#include "signedchord/Error.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
char const* to_cstring(ErrorCode code)
{
    switch (code)
    {
        case ErrorCode::invalid_argument:
            return "invalid argument";
        case ErrorCode::config:
            return "configuration error";
        case ErrorCode::io:
            return "I/O error";
        case ErrorCode::unsupported_metrics:
            return "unsupported metrics";
        case ErrorCode::rejection_stall:
            return "rejection sampling stalled";
        case ErrorCode::zero_charge:
            return "zero total charge";
        case ErrorCode::edge_mismatch:
            return "histogram edge mismatch";
        case ErrorCode::empty_intersection:
            return "empty intersection";
        case ErrorCode::grid_too_coarse:
            return "grid too coarse";
        case ErrorCode::unbounded_weight:
            return "unbounded weight";
        case ErrorCode::nonconvex_unsupported:
            return "nonconvex body unsupported";
        case ErrorCode::internal:
            return "internal error";
    }
    return "unknown error";
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
