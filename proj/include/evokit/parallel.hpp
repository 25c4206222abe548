#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

namespace evokit {

/// Worker count: explicit request, else EVOKIT_THREADS, else the hardware.
inline unsigned resolve_threads(unsigned requested = 0) {
  if (requested > 0) return requested;
  if (const char* env = std::getenv("EVOKIT_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(std::min<long>(v, 256));
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Smallest index in [0, total) for which pred holds, whatever the number of
/// workers. Workers claim fixed-size chunks in increasing order and stop once
/// their chunk starts past the best index found so far.
template <class Pred>
std::optional<std::uint64_t> first_match(std::uint64_t total, unsigned threads, Pred&& pred,
                                         std::uint64_t chunk = 64) {
  constexpr std::uint64_t none = UINT64_MAX;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> best{none};
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      for (;;) {
        std::uint64_t start = next.fetch_add(chunk);
        if (start >= total || start >= best.load()) return;
        std::uint64_t stop = std::min(total, start + chunk);
        for (std::uint64_t idx = start; idx < stop; ++idx) {
          if (idx >= best.load()) return;
          if (!pred(idx)) continue;
          std::uint64_t cur = best.load();
          while (idx < cur && !best.compare_exchange_weak(cur, idx)) {
          }
          return;
        }
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      best.store(0);
    }
  };

  threads = std::max(1u, threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned k = 0; k < threads; ++k) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  if (best.load() == none) return std::nullopt;
  return best.load();
}

}  // namespace evokit
