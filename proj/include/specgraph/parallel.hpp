#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace specgraph {

/// Runs fn(i) for i in [0, count) across hardware threads. Tasks must be
/// independent; the first exception, if any, is rethrown on the caller.
template <typename Fn>
void parallel_for(int count, Fn&& fn) {
  if (count <= 0) return;
  const unsigned hw = std::thread::hardware_concurrency();
  const int workers =
      std::min<int>(count, hw == 0 ? 1 : static_cast<int>(hw));
  if (workers <= 1) {
    for (int i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<int> cursor{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&] {
    for (;;) {
      const int i = cursor.fetch_add(1);
      if (i >= count || failed.load()) return;
      try {
        fn(i);
      } catch (...) {
        const std::lock_guard<std::mutex> lock(error_mutex);
        if (!failed.exchange(true)) error = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  threads.reserve(workers - 1);
  for (int t = 1; t < workers; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace specgraph
