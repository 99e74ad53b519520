#pragma once

#include <functional>

namespace blog {

// BLOGDYN_THREADS overrides the hardware concurrency
int thread_count();

// calls fn(i) for i in [0, n) on up to thread_count() threads; each i runs exactly
// once, so writes to per-index slots need no synchronization
void parallel_for(int n, const std::function<void(int)>& fn, int threads = 0);

}  // namespace blog
