#pragma once

#include <cstddef>
#include <functional>

namespace motifkit {

/// Worker count: hardware concurrency, capped by MOTIFKIT_THREADS when set.
unsigned worker_count();

/// Runs body(i) for i in [0, count).  Each index is visited exactly once;
/// callers write results by index so output order never depends on
/// scheduling.
void parallel_for(std::size_t count, std::function<void(std::size_t)> const &body);

} // namespace motifkit
