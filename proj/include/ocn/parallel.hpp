#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ocn {

/// Worker count used when a caller passes 0.
inline unsigned default_threads() {
  return std::max(1u, std::thread::hardware_concurrency());
}

inline unsigned resolve_threads(unsigned requested, std::size_t work_items) {
  unsigned t = requested == 0 ? default_threads() : requested;
  if (work_items < t) t = static_cast<unsigned>(std::max<std::size_t>(1, work_items));
  return t;
}

/// Splits [0, count) into `workers` contiguous shards and runs
/// fn(worker, begin, end) on each. Shard boundaries depend only on count and
/// workers; callers keep per-worker accumulators and reduce them afterwards.
template <typename Fn>
void parallel_shards(std::size_t count, unsigned workers, Fn&& fn) {
  if (workers <= 1) {
    fn(0u, std::size_t{0}, count);
    return;
  }
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    const std::size_t begin = count * w / workers;
    const std::size_t end = count * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        fn(w, begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

/// Dynamic variant for uneven per-item cost (BFS from many sources).
/// fn(worker, item) is called once per item in [0, count).
template <typename Fn>
void parallel_items(std::size_t count, unsigned workers, Fn&& fn) {
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(0u, i);
    return;
  }
  std::atomic<std::size_t> next{0};
  parallel_shards(workers, workers, [&](unsigned w, std::size_t, std::size_t) {
    for (std::size_t i = next++; i < count; i = next++) fn(w, i);
  });
}

}  // namespace ocn
