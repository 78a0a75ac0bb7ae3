#pragma once

// Ordered parallel map over an index range. Results land at their own index, so
// output never depends on worker count or scheduling.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace stablepat {

/// STABLEPAT_THREADS if set and positive, otherwise the hardware concurrency.
inline unsigned worker_count() {
  if (const char* env = std::getenv("STABLEPAT_THREADS")) {
    const long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1U, std::thread::hardware_concurrency());
}

/// out[i] = f(i) for i in [0, n). The first exception thrown by any task is rethrown.
template <class F>
auto parallel_map(std::size_t n, F f, unsigned workers = worker_count()) {
  using R = decltype(f(std::size_t{0}));
  std::vector<R> out(n);
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex error_mu;
  auto body = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < n;) {
      try {
        out[i] = f(i);
      } catch (...) {
        std::lock_guard lock(error_mu);
        if (!error) error = std::current_exception();
        next.store(n);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
  return out;
}

/// Splits [0, total) into at most `parts` contiguous chunks.
inline std::vector<std::pair<std::uint64_t, std::uint64_t>> split_range(std::uint64_t total, std::uint64_t parts) {
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  if (total == 0) return out;
  parts = std::max<std::uint64_t>(1, std::min(parts, total));
  const std::uint64_t step = (total + parts - 1) / parts;
  for (std::uint64_t b = 0; b < total; b += step) out.emplace_back(b, std::min(total, b + step));
  return out;
}

}  // namespace stablepat
