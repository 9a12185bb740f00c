// Copyright 2026 The Matchstack Authors
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

namespace matchstack {

// Number of workers used by fan-out helpers.  MATCHSTACK_THREADS caps the
// value; unset or invalid falls back to the hardware concurrency.  Always at
// least 1.
std::size_t worker_count();

// Invokes fn(begin, end) on disjoint contiguous chunks covering [0, count),
// possibly concurrently.  fn must be safe to run on disjoint ranges from
// different threads; results must be merged by the caller in index order so
// the outcome is independent of the schedule.
void parallel_chunks(std::size_t count,
                     const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace matchstack
