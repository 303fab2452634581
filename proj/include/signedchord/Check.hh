//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/Check.hh
//---------------------------------------------------------------------------//
#pragma once

#include <string>
#include <vector>

#include "Estimate.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
/*!
 * Outcome of comparing a measured quantity with its reference.
 *
 * \c tolerance is the absolute deviation allowed; \c z is the deviation in
 * units of the standard error (zero when the error vanishes). Checks marked
 * \c advisory are reported but do not affect the overall verdict.
 */
struct CheckRecord
{
    std::string name;
    double value{0};
    double error{0};
    double reference{0};
    double tolerance{0};
    double z{0};
    bool passed{false};
    bool advisory{false};
    std::string note;
};

// Pass if |value - reference| <= nsigma * error + floor
CheckRecord check_sigma(std::string name,
                        Estimate value,
                        double reference,
                        double nsigma = 4,
                        double floor = 1e-12);

// Pass if |value - reference| <= rel * |reference|
CheckRecord check_relative(std::string name, Estimate value, double reference, double rel);

// Pass if two estimates agree within nsigma combined (quadrature) errors
CheckRecord check_agree(std::string name,
                        Estimate a,
                        Estimate b,
                        double nsigma = 4,
                        double floor = 1e-12);

// Whether every non-advisory check passed
bool all_passed(std::vector<CheckRecord> const& checks);

//---------------------------------------------------------------------------//
}  // namespace signedchord
