// Copyright 2026 The genmetrics authors
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

namespace genmetrics {

// Worker cap: GENMETRICS_THREADS if set and valid, otherwise the hardware
// concurrency. Always at least 1.
std::size_t worker_count();

// Runs fn(i) for i in [0, n). Each index is processed by exactly one
// worker and no cross-index reductions happen here, so results are
// bitwise independent of the worker count.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

} // namespace genmetrics
