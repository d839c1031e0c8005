// ======================================================================== //
// Copyright 2026 the amriso authors                                        //
//                                                                          //
// Licensed under the Apache License, Version 2.0 (the "License");          //
// you may not use this file except in compliance with the License.         //
// You may obtain a copy of the License at                                  //
//                                                                          //
//     http://www.apache.org/licenses/LICENSE-2.0                           //
//                                                                          //
// Unless required by applicable law or agreed to in writing, software      //
// distributed under the License is distributed on an "AS IS" BASIS,        //
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied. //
// See the License for the specific language governing permissions and      //
// limitations under the License.                                           //
// ======================================================================== //

#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace amriso {

  /*! turn a requested thread count into an actual one: positive
      requests win, otherwise the AMRISO_THREADS environment variable,
      otherwise the hardware concurrency (at least 1) */
  inline int resolve_thread_count(int requested)
  {
    if (requested > 0) return requested;
    if (const char *env = std::getenv("AMRISO_THREADS")) {
      const int parsed = std::atoi(env);
      if (parsed > 0) return parsed;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? int(hw) : 1;
  }

  /*! run fn(chunk) for every chunk in [0,chunk_count) on the given
      number of threads. Chunks are claimed through a shared counter;
      which thread runs which chunk is not deterministic, so callers
      must make the per-chunk work order-independent. The first
      exception thrown by any chunk is rethrown on the caller. */
  template <typename Fn>
  void parallel_chunks(size_t chunk_count, int threads, Fn &&fn)
  {
    if (threads <= 1 || chunk_count <= 1) {
      for (size_t c = 0; c < chunk_count; c++)
        fn(c);
      return;
    }

    std::atomic<size_t> next{0};
    std::mutex error_mutex;
    std::exception_ptr error;

    auto worker = [&]() {
      for (;;) {
        const size_t c = next.fetch_add(1);
        if (c >= chunk_count) return;
        try {
          fn(c);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
          return;
        }
      }
    };

    std::vector<std::thread> pool;
    const size_t n = std::min<size_t>(threads, chunk_count);
    pool.reserve(n);
    for (size_t t = 0; t < n; t++)
      pool.emplace_back(worker);
    for (auto &t : pool)
      t.join();

    if (error) std::rethrow_exception(error);
  }

} // namespace amriso
