#pragma once

#include <cstddef>
#include <functional>

namespace triqent {

// <= 0 means hardware concurrency.
int resolve_threads(int requested);

// Calls body(i) for i in [0, n) on up to `threads` workers. The exception
// from the lowest failing index is rethrown after all workers finish.
void parallel_for(std::size_t n, int threads, const std::function<void(std::size_t)>& body);

}  // namespace triqent
