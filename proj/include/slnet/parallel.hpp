#pragma once

#include <cstddef>
#include <functional>

namespace slnet {

/// Worker count: hardware concurrency, capped by the SLNET_THREADS
/// environment variable when it holds a positive integer.
std::size_t worker_count();

/// Runs body(index, worker) for index in [0, count) on up to `workers`
/// threads. Indices are claimed in increasing order; callers write results by
/// index, so output never depends on scheduling. The first exception thrown
/// by a body is rethrown after all workers stop.
void parallel_for(std::size_t count, std::size_t workers,
                  const std::function<void(std::size_t index, std::size_t worker)>& body);

}  // namespace slnet
