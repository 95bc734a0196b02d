#pragma once

#include <cstddef>
#include <functional>

namespace shrq {

// SHRQ_THREADS overrides hardware_concurrency when set; at least 1.
int worker_count();

// Runs body(chunk_index) for chunk_index in [0, chunk_count). Chunks may
// execute on any worker in any order; bodies must write disjoint state.
void parallel_chunks(std::size_t chunk_count,
                     const std::function<void(std::size_t)>& body);

}  // namespace shrq
