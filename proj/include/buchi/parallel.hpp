/*
   Copyright 2026 The buchi authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <utility>
#include <vector>

namespace buchi {

// Splits [0, n) into at most `jobs` contiguous chunks, runs `work(lo, hi)`
// per chunk, and folds the chunk results in chunk order. The fold order is
// fixed, so the outcome does not depend on thread scheduling.
template <typename R, typename Work, typename Fold>
R chunked_reduce(std::uint64_t n, unsigned jobs, R init, Work&& work, Fold&& fold) {
    if (n == 0) return init;
    unsigned chunks = jobs < 1 ? 1 : jobs;
    if (chunks > n) chunks = static_cast<unsigned>(n);
    if (chunks == 1) return fold(std::move(init), work(0, n));

    std::vector<R> results(chunks, init);
    std::vector<std::exception_ptr> errors(chunks);
    std::vector<std::thread> threads;
    threads.reserve(chunks);
    const std::uint64_t base = n / chunks, rem = n % chunks;
    std::uint64_t lo = 0;
    for (unsigned i = 0; i < chunks; ++i) {
        const std::uint64_t hi = lo + base + (i < rem ? 1 : 0);
        threads.emplace_back([&, i, lo, hi] {
            try {
                results[i] = work(lo, hi);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        });
        lo = hi;
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    R acc = std::move(init);
    for (auto& r : results) acc = fold(std::move(acc), std::move(r));
    return acc;
}

// Parallel for over [0, n) in contiguous chunks; work(lo, hi) must only
// touch disjoint state per index (typically a pre-sized output vector).
template <typename Work>
void chunked_apply(std::uint64_t n, unsigned jobs, Work&& work) {
    struct Unit {};
    chunked_reduce(
        n, jobs, Unit{},
        [&](std::uint64_t lo, std::uint64_t hi) {
            work(lo, hi);
            return Unit{};
        },
        [](Unit, Unit) { return Unit{}; });
}

}  // namespace buchi
