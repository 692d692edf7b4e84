#include "syncprim/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace syncprim {

ScanOutcome parallel_scan(std::uint64_t count, std::size_t threads, bool stop_at_first,
                          const std::function<bool(std::uint64_t)>& fails) {
  constexpr std::uint64_t kChunk = 64;
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> least{UINT64_MAX};
  std::atomic<std::uint64_t> failures{0};
  std::atomic<bool> aborted{false};
  std::exception_ptr error;
  std::mutex error_mutex;

  auto worker = [&] {
    try {
      for (;;) {
        const std::uint64_t begin = next.fetch_add(kChunk);
        if (begin >= count || aborted.load()) return;
        const std::uint64_t end = std::min(count, begin + kChunk);
        for (std::uint64_t i = begin; i < end; ++i) {
          if (stop_at_first && i > least.load(std::memory_order_relaxed)) return;
          if (!fails(i)) continue;
          failures.fetch_add(1);
          std::uint64_t seen = least.load();
          while (i < seen && !least.compare_exchange_weak(seen, i)) {
          }
        }
      }
    } catch (...) {
      std::lock_guard lock(error_mutex);
      if (!error) error = std::current_exception();
      aborted = true;
    }
  };

  threads = std::max<std::size_t>(1, threads);
  if (threads == 1 || count <= kChunk) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
  }
  if (error) std::rethrow_exception(error);

  ScanOutcome outcome;
  if (least.load() != UINT64_MAX) outcome.first_failure = least.load();
  // with early stop the raw count depends on scheduling
  outcome.failures = stop_at_first ? (outcome.first_failure ? 1 : 0) : failures.load();
  return outcome;
}

}  // namespace syncprim
