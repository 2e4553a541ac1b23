/*
   Copyright 2026 The obda Authors

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

// Loop drivers shared by every kernel.  Exec::serial is the reference path
// used by the tests; Exec::parallel distributes iterations with OpenMP.  Both
// produce bit-identical results because each iteration owns its random
// stream and reductions are combined in a fixed chunk order.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace obda {

enum class Exec { serial, parallel };

inline int max_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

inline void set_threads(int n) noexcept {
#ifdef _OPENMP
    if (n > 0) omp_set_num_threads(n);
#else
    (void)n;
#endif
}

template <class Body>
void for_each_index(Exec exec, std::size_t n, Body&& body) {
    if (exec == Exec::parallel) {
        const auto count = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
        for (std::int64_t i = 0; i < count; ++i) body(static_cast<std::size_t>(i));
    } else {
        for (std::size_t i = 0; i < n; ++i) body(i);
    }
}

/// Sums `chunk_body(begin, end)` over fixed-size chunks of [0, n).  Chunk
/// partials are added in chunk order, so the total does not depend on the
/// thread count.
template <class T, class ChunkBody>
T chunked_reduce(Exec exec, std::size_t n, std::size_t chunk, ChunkBody&& chunk_body) {
    const std::size_t chunks = (n + chunk - 1) / chunk;
    std::vector<T> partial(chunks, T{});
    for_each_index(exec, chunks, [&](std::size_t c) {
        const std::size_t begin = c * chunk;
        partial[c] = chunk_body(begin, std::min(n, begin + chunk));
    });
    T total{};
    for (const T& p : partial) total += p;
    return total;
}

} // namespace obda
