#pragma once

#include <atomic>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace confetti {

inline int resolve_workers(int workers) {
  if (workers > 0) return workers;
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

// Runs body(i) for i in [0, count) across `workers` threads (0 = hardware
// concurrency). Work is handed out through a shared atomic counter, so the
// assignment of indices to threads is nondeterministic -- callers must make
// body(i) write only to slot i of preallocated storage (results then do not
// depend on the schedule). The first exception thrown by any body is
// rethrown on the calling thread after all threads join.
template <typename Body>
void parallel_for(std::size_t count, int workers, Body&& body) {
  int nw = resolve_workers(workers);
  if (count == 0) return;
  if (nw <= 1 || count == 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  if (static_cast<std::size_t>(nw) > count) nw = static_cast<int>(count);

  std::atomic<std::size_t> next{0};
  std::atomic<bool> failed{false};
  std::exception_ptr error;
  std::atomic<int> error_claim{0};

  auto worker = [&]() {
    for (;;) {
      std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count || failed.load(std::memory_order_relaxed)) return;
      try {
        body(i);
      } catch (...) {
        if (error_claim.exchange(1) == 0) error = std::current_exception();
        failed.store(true, std::memory_order_relaxed);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(nw));
  for (int t = 0; t < nw; ++t) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace confetti
