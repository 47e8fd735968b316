#pragma once

#include <cstddef>
#include <functional>

namespace rankarg {

/// Worker count: RANKARG_THREADS if set to a positive integer, otherwise the
/// hardware concurrency (at least 1).
std::size_t thread_limit();

/// Runs body(i) for i in [0, count) on up to thread_limit() threads. The first
/// exception thrown by a body is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace rankarg
