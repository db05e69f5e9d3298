#pragma once

#include <cstddef>
#include <functional>

namespace rflab {

/// Worker count: REFLECTIONLESS_LAB_THREADS when set to a positive integer,
/// otherwise std::thread::hardware_concurrency() (at least 1).
unsigned thread_count();

/// Calls body(i) for i in [0, n) on up to thread_count() threads. Each index
/// runs exactly once; the first exception thrown is rethrown after all
/// workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace rflab
