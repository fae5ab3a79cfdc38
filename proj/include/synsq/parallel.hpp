#pragma once

#include <cstddef>
#include <functional>

namespace synsq {

// Caps the number of worker threads used by the transforms. 0 restores the
// default (hardware concurrency). Results never depend on this value.
void set_max_threads(std::size_t count);
std::size_t max_threads();

// Splits [0, count) into contiguous chunks and runs body(begin, end) on each,
// one chunk per worker. Exceptions thrown by any chunk are rethrown.
void parallel_for_chunks(std::size_t count,
                         const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace synsq
