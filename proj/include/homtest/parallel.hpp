#pragma once

#include <cstddef>
#include <functional>

namespace homtest {

/// Runs body(i) for i in [0, count) on up to `threads` workers. Callers write
/// results into per-index slots, so output never depends on the worker count.
/// threads <= 0 means hardware concurrency.
void parallel_for(std::size_t count, int threads, const std::function<void(std::size_t)>& body);

int resolve_threads(int threads);

}  // namespace homtest
