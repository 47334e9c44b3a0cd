#pragma once

#include <cstddef>
#include <functional>

namespace nbperc {

/// Worker count: `requested` if nonzero, otherwise the hardware concurrency.
/// The NBPERC_THREADS environment variable caps the result.
std::size_t worker_count(std::size_t requested = 0);

/// Runs body(i) for i in [0, count) on up to `workers` threads.  Work items
/// must write to disjoint outputs.  If any item throws, the exception from
/// the lowest failing index is rethrown after all workers stop.
void parallel_for(std::size_t count, std::size_t workers, const std::function<void(std::size_t)>& body);

}  // namespace nbperc
