// SPDX-License-Identifier: Apache-2.0
//
// nfgain: near-field channel gains for planar arrays and reflecting surfaces
// Copyright (C) 2026 The nfgain Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace nfgain
{
    namespace detail
    {
        // Set on worker threads so nested parallel_for calls run inline instead of
        // oversubscribing the machine.
        inline thread_local bool inside_worker = false;
    }

    /// Splits [0, count) into contiguous chunks and runs `body(begin, end)` for each chunk on
    /// its own thread. Each index is visited exactly once, so writes to disjoint output slots
    /// give results independent of the thread count. The first exception thrown by any chunk
    /// is rethrown on the calling thread after all workers have joined.
    template <class Body>
    void parallel_for(std::size_t count, Body &&body, std::size_t min_chunk = 1)
    {
        if (count == 0)
            return;
        const std::size_t hw = std::max(1u, std::thread::hardware_concurrency());
        const std::size_t workers = std::clamp<std::size_t>(count / std::max<std::size_t>(min_chunk, 1), 1, hw);
        if (workers == 1 || detail::inside_worker)
        {
            body(std::size_t{0}, count);
            return;
        }

        std::exception_ptr failure;
        std::mutex failure_mutex;
        std::vector<std::thread> pool;
        pool.reserve(workers);
        const std::size_t step = (count + workers - 1) / workers;
        for (std::size_t begin = 0; begin < count; begin += step)
        {
            const std::size_t end = std::min(count, begin + step);
            pool.emplace_back([&, begin, end]
                              {
                                  detail::inside_worker = true;
                                  try
                                  {
                                      body(begin, end);
                                  }
                                  catch (...)
                                  {
                                      std::lock_guard lock(failure_mutex);
                                      if (!failure)
                                          failure = std::current_exception();
                                  } });
        }
        for (auto &t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }
}
