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

#pragma once

#include <cstddef>
#include <functional>

namespace richdist {

/// Worker count: RICHDIST_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned worker_count();

/// Runs task(worker, begin, end) over `workers` contiguous slices of
/// [0, count) and joins. Slices are balanced for triangular pair loops when
/// `triangular` is set (row i costs count - i).
void parallel_slices(std::size_t count, unsigned workers, bool triangular,
                     const std::function<void(unsigned, std::size_t, std::size_t)>& task);

}  // namespace richdist
