// Copyright 2026 The opmagic Authors
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

#ifndef OPMAGIC_PARALLEL_H
#define OPMAGIC_PARALLEL_H

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace opmagic {

/// Calls body(i) for every i in [0, count) using `workers` threads.
///
/// Items are dealt round-robin. Callers write results into slot i, so the
/// output never depends on the worker count. The first exception thrown by
/// any worker is rethrown after all threads join.
template <typename F>
void parallel_for(size_t count, size_t workers, F &&body) {
    if (workers <= 1 || count <= 1) {
        for (size_t i = 0; i < count; i++) {
            body(i);
        }
        return;
    }
    workers = std::min(workers, count);
    std::vector<std::exception_ptr> errors(workers);
    std::vector<std::thread> threads;
    threads.reserve(workers);
    for (size_t w = 0; w < workers; w++) {
        threads.emplace_back([&, w]() {
            try {
                for (size_t i = w; i < count; i += workers) {
                    body(i);
                }
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto &t : threads) {
        t.join();
    }
    for (auto &e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
}

}  // namespace opmagic

#endif
