#include "shrq/parallel.hpp"

#include <atomic>
#include <cstdlib>
#include <thread>
#include <vector>

namespace shrq {

int worker_count() {
  if (const char* env = std::getenv("SHRQ_THREADS")) {
    const int requested = std::atoi(env);
    if (requested >= 1) return requested;
  }
  int n = static_cast<int>(std::thread::hardware_concurrency());
  return n < 1 ? 1 : n;
}

void parallel_chunks(std::size_t chunk_count,
                     const std::function<void(std::size_t)>& body) {
  if (chunk_count == 0) return;
  const std::size_t workers =
      std::min<std::size_t>(static_cast<std::size_t>(worker_count()), chunk_count);
  if (workers <= 1) {
    for (std::size_t c = 0; c < chunk_count; ++c) body(c);
    return;
  }
  std::atomic<std::size_t> next{0};
  auto drain = [&] {
    for (;;) {
      std::size_t c = next.fetch_add(1);
      if (c >= chunk_count) return;
      body(c);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (std::size_t w = 1; w < workers; ++w) pool.emplace_back(drain);
  drain();
  for (auto& t : pool) t.join();
}

}  // namespace shrq
