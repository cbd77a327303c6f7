#pragma once

#include <cstddef>
#include <functional>

namespace schemasim {

/// Number of hardware threads, at least 1.
std::size_t default_parallelism() noexcept;

/// Calls body(i) for every i in [0, count) on up to `workers` threads.
/// Indices are handed out dynamically, so callers must not depend on the
/// execution order. The first exception thrown by any call is rethrown after
/// all workers have stopped.
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& body);

}  // namespace schemasim
