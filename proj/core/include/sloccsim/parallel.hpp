// Copyright 2026 The sloccsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef SLOCCSIM_PARALLEL_HPP
#define SLOCCSIM_PARALLEL_HPP

#include <atomic>
#include <functional>
#include <thread>
#include <vector>

namespace sloccsim {

/// Runs fn(i) for i in [0, n_tasks) on up to n_threads workers. Tasks write
/// to index-addressed slots, so results are deterministic regardless of
/// scheduling; seeds must be derived from the task index.
inline void parallel_for(int n_tasks, int n_threads, const std::function<void(int)> &fn) {
    if (n_threads <= 1 || n_tasks <= 1) {
        for (int i = 0; i < n_tasks; ++i) {
            fn(i);
        }
        return;
    }
    n_threads = std::min(n_threads, n_tasks);
    std::atomic<int> next{0};
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (int t = 0; t < n_threads; ++t) {
        pool.emplace_back([&] {
            while (true) {
                int i = next.fetch_add(1);
                if (i >= n_tasks) {
                    return;
                }
                fn(i);
            }
        });
    }
    for (auto &th : pool) {
        th.join();
    }
}

inline int default_thread_count() {
    unsigned hc = std::thread::hardware_concurrency();
    return hc == 0 ? 1 : static_cast<int>(hc);
}

}  // namespace sloccsim

#endif
