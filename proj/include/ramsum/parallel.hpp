#pragma once

#include <cstddef>
#include <functional>

namespace ramsum {

// Hardware parallelism, at least 1.
unsigned default_thread_count();

// Runs task(i) for every i in [0, count) on up to `threads` workers.
// Tasks are claimed dynamically; callers write results into slot i so the
// outcome never depends on the schedule. The first exception thrown by any
// task is rethrown on the calling thread after all workers stop.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t)>& task);

}  // namespace ramsum
