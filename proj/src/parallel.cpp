// Copyright 2026 The richdist Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "richdist/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <thread>
#include <vector>

namespace richdist {

unsigned worker_count() {
  if (const char* env = std::getenv("RICHDIST_THREADS")) {
    unsigned value = 0;
    const char* end = env + std::strlen(env);
    auto [ptr, ec] = std::from_chars(env, end, value);
    if (ec == std::errc() && ptr == end && value > 0) return value;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

void parallel_slices(std::size_t count, unsigned workers, bool triangular,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& task) {
  if (workers <= 1 || count < 2) {
    task(0, 0, count);
    return;
  }
  std::vector<std::size_t> bounds{0};
  if (triangular) {
    // Row i of a pair loop touches count - i - 1 pairs.
    const double total = static_cast<double>(count) * static_cast<double>(count - 1) / 2.0;
    double acc = 0;
    for (std::size_t i = 0; i < count && bounds.size() < workers; ++i) {
      acc += static_cast<double>(count - i - 1);
      if (acc >= total * static_cast<double>(bounds.size()) / workers) bounds.push_back(i + 1);
    }
  } else {
    for (unsigned w = 1; w < workers; ++w) bounds.push_back(count * w / workers);
  }
  bounds.push_back(count);

  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(bounds.size() - 1);
  for (std::size_t w = 0; w + 1 < bounds.size(); ++w) {
    threads.emplace_back([&, w] {
      try {
        task(static_cast<unsigned>(w), bounds[w], bounds[w + 1]);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace richdist
