//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file sampling/BatchPlan.cc
//---------------------------------------------------------------------------//
#include "signedchord/sampling/BatchPlan.hh"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

#include "signedchord/Error.hh"

namespace signedchord
{
//---------------------------------------------------------------------------//
void validate(BatchPlan const& plan)
{
    if (plan.streams < 2)
    {
        throw Error(ErrorCode::invalid_argument,
                    "at least two streams are needed for error estimates");
    }
    if (plan.workers == 0)
        throw Error(ErrorCode::invalid_argument, "worker count must be >= 1");
}

//---------------------------------------------------------------------------//
/*!
 * Batches are handed out through a shared counter; the first exception
 * thrown by any batch is rethrown once all workers have stopped.
 */
void for_each_batch(BatchPlan const& plan,
                    std::function<void(std::size_t)> const& f)
{
    validate(plan);
    std::size_t const nthreads = std::min(plan.workers, plan.streams);
    if (nthreads == 1)
    {
        for (std::size_t b = 0; b < plan.streams; ++b)
            f(b);
        return;
    }

    std::atomic<std::size_t> next{0};
    std::atomic<bool> failed{false};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto work = [&] {
        for (std::size_t b = next++; b < plan.streams && !failed; b = next++)
        {
            try
            {
                f(b);
            }
            catch (...)
            {
                std::lock_guard lock(error_mutex);
                if (!error)
                    error = std::current_exception();
                failed = true;
            }
        }
    };
    std::vector<std::thread> threads;
    threads.reserve(nthreads);
    for (std::size_t i = 0; i < nthreads; ++i)
        threads.emplace_back(work);
    for (auto& t : threads)
        t.join();
    if (error)
        std::rethrow_exception(error);
}

//---------------------------------------------------------------------------//
}  // namespace signedchord
