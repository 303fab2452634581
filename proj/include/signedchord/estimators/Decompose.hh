//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/estimators/Decompose.hh
//! \brief Signed decompositions of rays and chords through a body
//---------------------------------------------------------------------------//
#pragma once

#include <vector>

#include "signedchord/geometry/IntervalSet.hh"
#include "signedchord/signedhist/SignedHistogram.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
//! Boundary crossing along a ray with its alternating sign
struct SignedRadius
{
    double radius{0};
    int sign{1};
};

/*!
 * Signed boundary crossings of a ray starting inside a body.
 *
 * For in-body intervals [0, b0], [a1, b1], ..., the radii are b0, a1, b1, ...
 * with signs +, -, +, ... so that the signed sum of radii is the total
 * in-body length and the signed count is one.
 */
struct RadiiDecomposition
{
    std::vector<SignedRadius> radii;
    double osd_length{0};

    double first_radius() const { return radii.front().radius; }
};

//---------------------------------------------------------------------------//
//! Which group of the chord decomposition a signed length belongs to
enum class ChordTerm
{
    segment,
    pair_positive,
    pair_negative,
};

struct ChordPiece
{
    double length{0};
    int charge{1};
    ChordTerm term{ChordTerm::segment};

    SignedSample sample() const { return {length, charge}; }
};

/*!
 * Signed lengths of a chord crossing a body in n intervals.
 *
 * With crossing parameters L0 < L1 < ... < L(2n-1), each segment
 * L(2k+1) - L(2k) has charge +1. Every pair of segments j < k adds the
 * positive lengths L(2k) - L(2j+1) and L(2k+1) - L(2j) and the negative
 * lengths L(2k) - L(2j) and L(2k+1) - L(2j+1). The signed count is n and
 * the signed sum of squared lengths equals the squared total length.
 */
struct ChordDecomposition
{
    std::vector<ChordPiece> pieces;
    std::size_t n_intervals{0};
    double ocd_length{0};
};

// Decompose the in-body intervals of a ray starting at t = 0 inside the body
RadiiDecomposition radii_decompose(IntervalSet const& ray_intervals);

// Decompose the in-body intervals of a full line
ChordDecomposition chord_decompose(IntervalSet const& intervals);

//---------------------------------------------------------------------------//
}  // namespace signedchord
