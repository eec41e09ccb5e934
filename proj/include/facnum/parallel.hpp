#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace facnum {

/// 0 means "use the available hardware parallelism".
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Calls body(begin, end, worker) over [0, n) in dynamically claimed chunks.
/// Rethrows the first exception raised by any worker.
template <typename Body>
void parallel_chunks(std::size_t n, unsigned threads, Body&& body, std::size_t chunk = 16) {
  threads = std::max(1U, std::min<unsigned>(resolve_threads(threads), static_cast<unsigned>(std::max<std::size_t>(1, n / chunk))));
  if (threads == 1) {
    body(std::size_t{0}, n, 0U);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&](unsigned id) {
    try {
      while (true) {
        const std::size_t begin = next.fetch_add(chunk);
        if (begin >= n) break;
        body(begin, std::min(n, begin + chunk), id);
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(threads - 1);
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

/// Sum of f(i) over [0, n). Integer addition is associative, so the result
/// does not depend on the thread count.
template <typename F>
std::uint64_t parallel_sum(std::size_t n, unsigned threads, F&& f, std::size_t chunk = 16) {
  const unsigned workers = resolve_threads(threads);
  std::vector<std::uint64_t> partial(workers, 0);
  parallel_chunks(n, workers, [&](std::size_t begin, std::size_t end, unsigned id) {
    std::uint64_t acc = 0;
    for (std::size_t i = begin; i < end; ++i) acc += f(i);
    partial[id] += acc;
  }, chunk);
  std::uint64_t total = 0;
  for (std::uint64_t v : partial) total += v;
  return total;
}

}  // namespace facnum
