#pragma once

#include <cstddef>
#include <functional>

namespace resdecomp {

/// Worker count: RESDECOMP_THREADS when set and positive, otherwise the
/// hardware concurrency (0 also means auto).
std::size_t thread_count();

/// Runs body(i) for i in [0, count). Each index runs exactly once; callers
/// write results into slots owned by the index so the outcome does not
/// depend on scheduling.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace resdecomp
