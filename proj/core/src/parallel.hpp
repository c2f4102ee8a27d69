#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace qgi::detail {

inline int worker_count(int requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Splits [0, total) into contiguous chunks, one per worker, and calls
/// fn(worker, begin, end). Chunk boundaries depend only on (total, workers),
/// so callers that merge per-worker results in worker order are deterministic.
template <typename Fn>
void parallel_chunks(std::uint64_t total, int workers, Fn&& fn) {
  workers = std::max(1, workers);
  if (workers == 1 || total < 2) {
    fn(0, std::uint64_t{0}, total);
    return;
  }
  const std::uint64_t w = static_cast<std::uint64_t>(workers);
  const std::uint64_t chunk = (total + w - 1) / w;
  std::vector<std::jthread> pool;
  for (std::uint64_t k = 0; k < w; ++k) {
    const std::uint64_t b = k * chunk;
    const std::uint64_t e = std::min(total, b + chunk);
    if (b >= e) break;
    pool.emplace_back([&fn, k, b, e] { fn(static_cast<int>(k), b, e); });
  }
}

}  // namespace qgi::detail
