#pragma once
// Minimal fork-join helper. Thread count comes from the YAO4_THREADS
// environment variable (0 or unset = hardware concurrency). Results must be
// written to per-index slots; callers do any reduction afterwards in index
// order so output stays deterministic.

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace yao4 {

int configured_thread_count();

template <typename Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const int threads = configured_thread_count();
  if (threads <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::atomic<bool> failed{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  const int spawn = std::min<std::size_t>(std::size_t(threads), count) - 1;
  pool.reserve(std::size_t(spawn));
  for (int t = 0; t < spawn; ++t) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  if (failed.load()) std::rethrow_exception(error);
}

}  // namespace yao4
