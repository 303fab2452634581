//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/Estimate.hh
//---------------------------------------------------------------------------//
#pragma once

namespace signedchord
{
//---------------------------------------------------------------------------//
//! Monte Carlo value with its standard error
struct Estimate
{
    double value{0};
    double error{0};
};

//---------------------------------------------------------------------------//
}  // namespace signedchord
