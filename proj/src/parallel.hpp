#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <thread>
#include <vector>

namespace hyperknot::internal {

// Worker cap: HYPERKNOT_THREADS when set to a positive integer, otherwise
// the hardware concurrency (at least 1).
inline unsigned worker_count() {
  if (const char* env = std::getenv("HYPERKNOT_THREADS")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v >= 1) {
      return static_cast<unsigned>(std::min(v, 256L));
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Splits [0, total) into at most worker_count() contiguous chunks, none
// smaller than min_chunk, and runs body(chunk, begin, end) on one thread per
// chunk. Chunk layout depends only on the arguments and the worker cap, so
// chunk-indexed output merges deterministically. body must not throw.
inline void chunked_scan(uint64_t total, uint64_t min_chunk,
                         const std::function<void(unsigned, uint64_t, uint64_t)>& body) {
  if (total == 0) return;
  uint64_t max_chunks = min_chunk > 0 ? std::max<uint64_t>(1, total / min_chunk) : total;
  unsigned chunks =
      static_cast<unsigned>(std::min<uint64_t>(worker_count(), std::min<uint64_t>(max_chunks, total)));
  if (chunks <= 1) {
    body(0, 0, total);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(chunks);
  const uint64_t base = total / chunks;
  const uint64_t extra = total % chunks;
  uint64_t begin = 0;
  for (unsigned k = 0; k < chunks; ++k) {
    uint64_t end = begin + base + (k < extra ? 1 : 0);
    pool.emplace_back([&body, k, begin, end] { body(k, begin, end); });
    begin = end;
  }
  for (std::thread& t : pool) t.join();
}

}  // namespace hyperknot::internal
