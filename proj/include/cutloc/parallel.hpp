#pragma once

#include <cstddef>
#include <functional>

namespace cutloc {

/// Worker count: CUTLOC_THREADS when set and positive, otherwise the hardware concurrency.
unsigned thread_count();

/// Runs body(i) for i in [0, n). Each index is visited exactly once; callers write
/// only to slot i so results do not depend on the schedule.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace cutloc
