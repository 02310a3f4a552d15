// Copyright 2026 The dmatch Authors
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

#ifndef DMATCH_PARALLEL_HPP
#define DMATCH_PARALLEL_HPP

#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace dmatch {

/// Worker count: DMATCH_THREADS when set and positive, otherwise the
/// available hardware parallelism.
int worker_count();

/// Run fn(i) for i in [0, count) across worker threads. Blocks until done;
/// the first exception thrown by any task is rethrown. Callers index their
/// own result vectors, so output order is theirs to keep deterministic.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace dmatch

#endif  // DMATCH_PARALLEL_HPP
