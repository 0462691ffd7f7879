#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace fraclab {

/// Run fn(i) for i in [0, count) on up to `workers` threads. Each index is
/// processed exactly once; callers write results into index-addressed slots,
/// which keeps ensemble output independent of scheduling order. The first
/// exception thrown by any worker is rethrown on the calling thread.
template <typename Fn>
void parallel_for_indexed(std::size_t count, unsigned workers, Fn&& fn) {
  if (count == 0) return;
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  unsigned n_threads = workers == 0 ? hw : workers;
  if (n_threads > count) n_threads = static_cast<unsigned>(count);

  if (n_threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::atomic<bool> failed{false};
  std::vector<std::thread> pool;
  pool.reserve(n_threads);
  for (unsigned t = 0; t < n_threads; ++t) {
    pool.emplace_back([&]() {
      for (;;) {
        const std::size_t i = next.fetch_add(1);
        if (i >= count || failed.load()) return;
        try {
          fn(i);
        } catch (...) {
          if (!failed.exchange(true)) first_error = std::current_exception();
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (failed.load() && first_error) std::rethrow_exception(first_error);
}

}  // namespace fraclab
