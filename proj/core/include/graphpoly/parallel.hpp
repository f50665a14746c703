#pragma once

#include <functional>

namespace graphpoly {

// 0 means "ask the hardware"; anything else is used as given.
unsigned resolve_workers(unsigned requested);

// Runs fn(0) .. fn(ntasks-1), distributing tasks over `workers` threads via a
// shared atomic counter.  fn must only write to per-task slots; the caller
// merges results in task order afterwards so output is worker-count invariant.
void parallel_tasks(unsigned workers, std::size_t ntasks, const std::function<void(std::size_t)>& fn);

}  // namespace graphpoly
