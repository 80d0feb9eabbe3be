// Bounded worker-pool helpers: an index-stable parallel map whose results
// land in input order regardless of scheduling. The worker count follows the
// hardware, capped by the GSC_MAX_WORKERS environment variable.
#pragma once

#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <thread>
#include <type_traits>
#include <vector>

namespace gsc {

inline std::size_t max_workers() {
  std::size_t workers = std::thread::hardware_concurrency();
  if (workers == 0) workers = 1;
  if (const char* env = std::getenv("GSC_MAX_WORKERS")) {
    char* end = nullptr;
    long parsed = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && parsed > 0 &&
        static_cast<std::size_t>(parsed) < workers)
      workers = static_cast<std::size_t>(parsed);
  }
  return workers;
}

// Evaluates fn(0), ..., fn(count - 1) across workers and returns the results
// in index order. fn must be callable concurrently and its result type
// default-constructible. The first exception thrown by fn wins and is
// rethrown on the calling thread after the pool drains.
template <typename Fn>
auto parallel_map(std::size_t count, Fn fn)
    -> std::vector<std::invoke_result_t<Fn, std::size_t>> {
  std::vector<std::invoke_result_t<Fn, std::size_t>> results(count);
  std::size_t workers = max_workers();
  if (workers > count) workers = count;
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) results[i] = fn(i);
    return results;
  }

  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  auto drain = [&] {
    while (true) {
      std::size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        results[i] = fn(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(drain);
  for (std::thread& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return results;
}

}  // namespace gsc
