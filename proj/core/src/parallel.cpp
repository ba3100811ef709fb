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

#include "qsim/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <thread>
#include <vector>

namespace qsim {

namespace {

std::size_t default_worker_count() {
    std::size_t hw = std::thread::hardware_concurrency();
    if (hw == 0) {
        hw = 1;
    }
    if (const char* env = std::getenv("QSIM_THREADS")) {
        const long cap = std::atol(env);
        if (cap >= 1 && static_cast<std::size_t>(cap) < hw) {
            hw = static_cast<std::size_t>(cap);
        }
    }
    return hw;
}

std::atomic<std::size_t> g_override{0};

} // namespace

std::size_t worker_count() {
    const std::size_t n = g_override.load(std::memory_order_relaxed);
    if (n != 0) {
        return n;
    }
    static const std::size_t def = default_worker_count();
    return def;
}

void set_worker_count(std::size_t n) {
    g_override.store(n, std::memory_order_relaxed);
}

void parallel_for_rows(std::size_t rows,
                       const std::function<void(std::size_t, std::size_t)>& body) {
    const std::size_t workers = std::min(worker_count(), rows == 0 ? 1 : rows);
    if (workers <= 1) {
        body(0, rows);
        return;
    }

    std::vector<std::thread> threads;
    threads.reserve(workers);
    std::exception_ptr first_error;
    std::atomic_flag error_latch = ATOMIC_FLAG_INIT;

    for (std::size_t c = 0; c < workers; ++c) {
        const std::size_t begin = rows * c / workers;
        const std::size_t end = rows * (c + 1) / workers;
        threads.emplace_back([&, begin, end] {
            try {
                body(begin, end);
            } catch (...) {
                if (!error_latch.test_and_set()) {
                    first_error = std::current_exception();
                }
            }
        });
    }
    for (auto& t : threads) {
        t.join();
    }
    if (first_error) {
        std::rethrow_exception(first_error);
    }
}

} // namespace qsim
