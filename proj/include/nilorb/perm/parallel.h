// Copyright 2026 The nilorb Authors
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

#ifndef NILORB_PERM_PARALLEL_H
#define NILORB_PERM_PARALLEL_H

#include <atomic>
#include <chrono>
#include <cstddef>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include "nilorb/perm/errors.h"

namespace nilorb {

/// Wall-clock budget shared by long-running searches.
class Deadline {
  public:
    Deadline() = default;
    static Deadline after_seconds(double seconds) {
        Deadline d;
        d.end_ = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(std::chrono::duration<double>(seconds));
        return d;
    }

    bool expired() const { return end_ && std::chrono::steady_clock::now() >= *end_; }
    void check() const {
        if (expired()) {
            throw DeadlineExceeded("time budget exhausted");
        }
    }

  private:
    std::optional<std::chrono::steady_clock::time_point> end_;
};

/// Runs f(i) for i in [0, n) on up to `jobs` threads. The exception thrown by
/// the lowest failing index is rethrown, so failures do not depend on the
/// schedule.
template <class F>
void parallel_for(std::size_t n, unsigned jobs, F&& f) {
    if (jobs <= 1 || n <= 1) {
        for (std::size_t i = 0; i < n; ++i) {
            f(i);
        }
        return;
    }
    std::atomic<std::size_t> next{0};
    std::mutex mu;
    std::size_t failed_at = n;
    std::exception_ptr failure;
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) {
            try {
                f(i);
            } catch (...) {
                std::lock_guard lock(mu);
                if (i < failed_at) {
                    failed_at = i;
                    failure = std::current_exception();
                }
            }
        }
    };
    std::vector<std::thread> threads;
    unsigned count = static_cast<unsigned>(std::min<std::size_t>(jobs, n));
    for (unsigned t = 0; t < count; ++t) {
        threads.emplace_back(worker);
    }
    for (auto& t : threads) {
        t.join();
    }
    if (failure) {
        std::rethrow_exception(failure);
    }
}

}  // namespace nilorb

#endif
