#pragma once

#include <cstddef>
#include <functional>

namespace hnstrata {

// Worker count: HNSTRATA_THREADS when set (>= 1), else hardware concurrency.
int thread_cap();

// Run fn(i) for i in [0, n) on up to thread_cap() workers. Callers keep
// determinism by writing to index i of a pre-sized buffer; iteration order
// is unspecified.
void parallel_for(size_t n, const std::function<void(size_t)>& fn);

}  // namespace hnstrata
