// Copyright 2026 The qsk Authors
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

#ifndef QSK_PARALLEL_HPP
#define QSK_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace qsk {

/// Worker count from the QSK_THREADS environment variable; 0, unset or
/// unparsable means std::thread::hardware_concurrency().
std::size_t worker_count();

/// Calls body(begin, end) on disjoint contiguous chunks covering [0, n).
/// Chunk boundaries depend only on n and the worker count, so callers that
/// write per-index results get identical output for any thread schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace qsk

#endif  // QSK_PARALLEL_HPP
