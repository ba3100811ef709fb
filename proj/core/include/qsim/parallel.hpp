// Copyright 2026 The qsim authors
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

namespace qsim {

/// Number of workers used by parallel-mode kernels. Defaults to the hardware
/// thread count, capped by the QSIM_THREADS environment variable when set.
std::size_t worker_count();

/// Overrides the worker count (may exceed the hardware thread count).
/// Passing 0 restores the default.
void set_worker_count(std::size_t n);

/// Runs body(begin, end) over a contiguous partition of [0, rows) with one
/// chunk per worker. Chunk boundaries never split a row, so the work each
/// element receives is independent of the worker count.
void parallel_for_rows(std::size_t rows,
                       const std::function<void(std::size_t, std::size_t)>& body);

} // namespace qsim
