#pragma once

#include <cstddef>
#include <functional>

namespace doe {

/// Worker cap: DOE_THREADS when set (minimum 1), hardware concurrency
/// otherwise.
std::size_t thread_budget();

/// Runs fn(0..jobs-1), spreading indices over at most thread_budget()
/// workers. Each index runs exactly once; exceptions are rethrown on the
/// caller thread. Results must be written to per-index slots so the
/// outcome is independent of scheduling.
void parallel_for(std::size_t jobs, const std::function<void(std::size_t)>& fn);

}  // namespace doe
