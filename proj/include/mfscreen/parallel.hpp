#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace mfscreen {

inline unsigned default_threads() {
  const unsigned h = std::thread::hardware_concurrency();
  return h ? h : 1;
}

/// Splits [begin, end) into at most `threads` contiguous chunks and runs
/// chunk_fn(chunk_begin, chunk_end) on each. The caller is responsible for
/// writing to disjoint slots; the first worker exception is rethrown after
/// all workers join.
inline void parallel_for_chunks(std::size_t begin, std::size_t end, unsigned threads,
                                const std::function<void(std::size_t, std::size_t)>& chunk_fn) {
  const std::size_t total = end > begin ? end - begin : 0;
  if (total == 0) return;
  if (threads == 0) threads = default_threads();
  const std::size_t workers = std::min<std::size_t>(threads, total);
  if (workers <= 1) {
    chunk_fn(begin, end);
    return;
  }

  std::vector<std::thread> pool;
  pool.reserve(workers);
  std::exception_ptr first_error;
  std::mutex error_mutex;

  const std::size_t base = total / workers;
  const std::size_t extra = total % workers;
  std::size_t cursor = begin;
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t len = base + (w < extra ? 1 : 0);
    const std::size_t lo = cursor;
    const std::size_t hi = cursor + len;
    cursor = hi;
    pool.emplace_back([&, lo, hi] {
      try {
        chunk_fn(lo, hi);
      } catch (...) {
        std::lock_guard<std::mutex> g(error_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace mfscreen
