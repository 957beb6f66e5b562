#pragma once

#include <cstddef>
#include <functional>

namespace sqcheck {

// Upper bound on worker threads used by degreewise loops. 0 selects
// std::thread::hardware_concurrency().
void set_thread_count(unsigned count);
unsigned thread_count();

// Runs body(i) for i in [0, count). Iterations must be independent.
// Exceptions thrown by body are rethrown on the calling thread (the one
// from the lowest index wins, so failures are deterministic).
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

} // namespace sqcheck
