#pragma once

// Fixed-chunk parallel map. Chunk boundaries never depend on the worker
// count, so reductions over the returned vector are reproducible.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace heisbl::detail {

inline unsigned resolve_workers(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

template <class R, class F>
std::vector<R> map_chunks(std::size_t chunks, unsigned workers, F&& f) {
  std::vector<R> out(chunks);
  const unsigned w = static_cast<unsigned>(std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(chunks, 1)));
  if (w <= 1) {
    for (std::size_t c = 0; c < chunks; ++c) out[c] = f(c);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto body = [&] {
    for (;;) {
      const std::size_t c = next.fetch_add(1);
      if (c >= chunks) return;
      try {
        out[c] = f(c);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(chunks);
        return;
      }
    }
  };
  std::vector<std::thread> threads;
  for (unsigned i = 0; i < w; ++i) threads.emplace_back(body);
  for (auto& t : threads) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

}  // namespace heisbl::detail
