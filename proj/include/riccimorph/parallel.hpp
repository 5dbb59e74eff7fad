// Copyright 2026 The Riccimorph Authors.
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

#pragma once

#include <atomic>
#include <exception>
#include <functional>
#include <thread>
#include <utility>
#include <vector>

namespace riccimorph {

/// Runs body(0..n-1) on a worker pool (workers <= 0 means hardware
/// concurrency). Results must go into caller-owned per-index slots, so the
/// outcome is independent of scheduling. The first exception by index is
/// rethrown after all workers join.
inline void parallel_for(int n, int workers,
                         const std::function<void(int)>& body) {
  if (workers <= 0)
    workers = static_cast<int>(
        std::max(1u, std::thread::hardware_concurrency()));
  workers = std::min(workers, n);
  if (workers <= 1) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  std::vector<std::pair<int, std::exception_ptr>> errors(
      workers, {n, nullptr});
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      for (int i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
        try {
          body(i);
        } catch (...) {
          if (errors[w].second == nullptr)
            errors[w] = {i, std::current_exception()};
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  std::pair<int, std::exception_ptr> first{n, nullptr};
  for (const auto& e : errors)
    if (e.second && e.first < first.first) first = e;
  if (first.second) std::rethrow_exception(first.second);
}

}  // namespace riccimorph
