// Copyright 2026 The nilentropy Authors.
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

#ifndef NILENTROPY_SRC_PARALLEL_HPP
#define NILENTROPY_SRC_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace nilentropy::detail {

/// Worker count: hardware concurrency, capped by NILENTROPY_THREADS when set.
unsigned worker_count();

/// Runs body(begin, end) over contiguous chunks of [0, n). Chunks are
/// independent; the caller merges results in index order.
void parallel_for(std::size_t n, std::size_t min_chunk,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace nilentropy::detail

#endif  // NILENTROPY_SRC_PARALLEL_HPP
