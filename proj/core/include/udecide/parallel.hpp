#pragma once

#include <cstddef>
#include <functional>

namespace udecide {

/// Worker count from UDECIDE_THREADS, else std::thread::hardware_concurrency
/// (at least 1). Throws InvalidArgument on a malformed or zero value.
unsigned resolve_thread_count();

/// Calls body(i) for every i in [0, n) on up to `threads` workers. Indices
/// are handed out dynamically; the first exception thrown is rethrown after
/// all workers stop.
void parallel_for(std::size_t n, unsigned threads,
                  const std::function<void(std::size_t)>& body);

}  // namespace udecide
