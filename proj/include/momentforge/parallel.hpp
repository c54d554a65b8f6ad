#pragma once

#include <cstddef>
#include <functional>

namespace momentforge {

/// Worker count: hardware concurrency, capped by MOMENTFORGE_THREADS when set.
int worker_count();

/// Runs fn(i) for i in [0, count) on up to worker_count() threads. Each index
/// is visited exactly once; the first exception thrown is rethrown here.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& fn);

}  // namespace momentforge
