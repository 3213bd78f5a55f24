#include "xset/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace xset {

namespace {
std::atomic<unsigned> g_workers{0};
}

unsigned worker_count() {
  unsigned w = g_workers.load(std::memory_order_relaxed);
  if (w != 0) return w;
  w = std::thread::hardware_concurrency();
  return w != 0 ? w : 1;
}

void set_worker_count(unsigned n) { g_workers.store(n, std::memory_order_relaxed); }

void parallel_chunks(std::size_t n, std::size_t min_chunk,
                     const std::function<void(std::size_t, std::size_t)>& f) {
  if (n == 0) return;
  const std::size_t cap = min_chunk > 0 ? n / min_chunk : n;
  const std::size_t nw = std::min<std::size_t>(worker_count(), std::max<std::size_t>(cap, 1));
  if (nw <= 1) {
    f(0, n);
    return;
  }

  std::vector<std::thread> pool;
  pool.reserve(nw);
  std::mutex err_mutex;
  std::exception_ptr first_error;
  for (std::size_t i = 0; i < nw; ++i) {
    const std::size_t begin = i * n / nw;
    const std::size_t end = (i + 1) * n / nw;
    pool.emplace_back([&, begin, end] {
      try {
        if (begin < end) f(begin, end);
      } catch (...) {
        std::lock_guard<std::mutex> lock(err_mutex);
        if (!first_error) first_error = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first_error) std::rethrow_exception(first_error);
}

}  // namespace xset
