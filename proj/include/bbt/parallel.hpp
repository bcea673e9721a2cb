/*
 * Copyright 2026 The bbtlab Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *   http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace bbt {

/* Runs body(i) for i in [0, count) on up to `threads` workers pulling from a
 * shared counter. Results must be written to pre-sized slots indexed by i so
 * output order stays deterministic regardless of scheduling. The first
 * exception thrown by any worker is rethrown on the calling thread. */
template <typename Body>
void parallel_for(uint64_t count, int threads, Body&& body) {
    if (threads <= 1 || count <= 1) {
        for (uint64_t i = 0; i < count; ++i)
            body(i);
        return;
    }
    const int workers = static_cast<int>(
        std::min<uint64_t>(count, static_cast<uint64_t>(threads)));
    std::atomic<uint64_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(workers));
    for (int t = 0; t < workers; ++t) {
        pool.emplace_back([&] {
            for (;;) {
                const uint64_t i = next.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    body(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error)
                        first_error = std::current_exception();
                    return;
                }
            }
        });
    }
    for (auto& th : pool)
        th.join();
    if (first_error)
        std::rethrow_exception(first_error);
}

} // namespace bbt
