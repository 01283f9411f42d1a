#pragma once

#include <cstddef>
#include <functional>

namespace gnum {

// Worker count used by parallel_for; 0 selects hardware concurrency.
void set_thread_count(unsigned n);
unsigned thread_count();

// Calls body(i) for i in [0, n) on up to thread_count() threads. Each index
// is visited exactly once; callers write results into per-index slots so
// reductions stay deterministic.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace gnum
