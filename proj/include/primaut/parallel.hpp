#pragma once

#include <atomic>
#include <cstdint>
#include <functional>
#include <thread>
#include <vector>

namespace primaut {

/// Splits [0, total) into contiguous chunks and processes them on `jobs`
/// threads. fn(chunk_index, begin, end) must write results into per-chunk
/// slots; merging by chunk index keeps results independent of thread count.
inline void parallel_chunks(
    std::uint64_t total, unsigned jobs, std::size_t chunk_count,
    const std::function<void(std::size_t, std::uint64_t, std::uint64_t)>& fn) {
  if (total == 0) return;
  if (jobs <= 1 || total < 2 * chunk_count) {
    fn(0, 0, total);
    return;
  }
  if (chunk_count == 0) chunk_count = 1;
  const std::uint64_t step = (total + chunk_count - 1) / chunk_count;
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    while (true) {
      const std::size_t ci = next.fetch_add(1);
      if (ci >= chunk_count) return;
      const std::uint64_t begin = ci * step;
      const std::uint64_t end = std::min(total, begin + step);
      if (begin < end) fn(ci, begin, end);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < jobs; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
}

}  // namespace primaut
