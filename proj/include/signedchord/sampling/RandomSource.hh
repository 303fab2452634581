//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file signedchord/sampling/RandomSource.hh
//---------------------------------------------------------------------------//
#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace signedchord
{
//---------------------------------------------------------------------------//
/*!
 * Reproducible random stream identified by a seed and a substream index.
 *
 * The engine state is derived from both identifiers through \c std::seed_seq,
 * so each (seed, stream) pair gives a fixed sequence and different streams
 * are decorrelated. Uniform deviates use the top 53 bits of each draw.
 */
class RandomSource
{
  public:
    using result_type = std::uint64_t;

    RandomSource(std::uint64_t seed, std::uint64_t stream)
        : seed_(seed), stream_(stream)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed),
                          static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(stream),
                          static_cast<std::uint32_t>(stream >> 32),
                          0x5c0dU};
        engine_.seed(seq);
    }

    std::uint64_t seed() const { return seed_; }
    std::uint64_t stream() const { return stream_; }

    //! Uniform deviate on [0, 1)
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1p-53; }

    //! Uniform deviate on [a, b)
    double uniform(double a, double b) { return a + (b - a) * this->uniform(); }

    //! Exponential deviate with the given mean
    double exponential(double mean) { return -mean * std::log1p(-this->uniform()); }

    //! Raw 64-bit draw
    result_type operator()() { return engine_(); }

  private:
    std::uint64_t seed_;
    std::uint64_t stream_;
    std::mt19937_64 engine_;
};

//---------------------------------------------------------------------------//
}  // namespace signedchord
