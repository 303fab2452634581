//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file Check.cc
//---------------------------------------------------------------------------//
#include "signedchord/Check.hh"

#include <cmath>

namespace signedchord
{
namespace
{
double zscore(double diff, double err)
{
    return err > 0 ? diff / err : 0;
}
}  // namespace

//---------------------------------------------------------------------------//
CheckRecord check_sigma(
    std::string name, Estimate value, double reference, double nsigma, double floor)
{
    CheckRecord r;
    r.name = std::move(name);
    r.value = value.value;
    r.error = value.error;
    r.reference = reference;
    double const err = std::isfinite(value.error) ? value.error : 0;
    r.tolerance = nsigma * err + floor;
    r.z = zscore(value.value - reference, err);
    r.passed = std::fabs(value.value - reference) <= r.tolerance;
    return r;
}

//---------------------------------------------------------------------------//
CheckRecord
check_relative(std::string name, Estimate value, double reference, double rel)
{
    CheckRecord r;
    r.name = std::move(name);
    r.value = value.value;
    r.error = value.error;
    r.reference = reference;
    r.tolerance = rel * std::fabs(reference);
    r.z = zscore(value.value - reference,
                 std::isfinite(value.error) ? value.error : 0);
    r.passed = std::fabs(value.value - reference) <= r.tolerance;
    return r;
}

//---------------------------------------------------------------------------//
CheckRecord
check_agree(std::string name, Estimate a, Estimate b, double nsigma, double floor)
{
    double const ea = std::isfinite(a.error) ? a.error : 0;
    double const eb = std::isfinite(b.error) ? b.error : 0;
    CheckRecord r = check_sigma(std::move(name),
                                {a.value, std::hypot(ea, eb)},
                                b.value,
                                nsigma,
                                floor);
    return r;
}

//---------------------------------------------------------------------------//
bool all_passed(std::vector<CheckRecord> const& checks)
{
    for (auto const& c : checks)
    {
        if (!c.advisory && !c.passed)
            return false;
    }
    return true;
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
