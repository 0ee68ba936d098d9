#pragma once

#include <functional>

namespace tableaux {

// Worker threads used by parallel_for. Defaults to 1; anything below 1 is
// clamped to 1.
void set_worker_count(int n);
int worker_count();

// Calls fn(0), ..., fn(count - 1), each exactly once, possibly from
// several threads. Nothing is guaranteed about ordering, so callers keep
// results deterministic by writing into per-index slots and combining
// them after the call returns.
void parallel_for(int count, const std::function<void(int)>& fn);

}  // namespace tableaux
