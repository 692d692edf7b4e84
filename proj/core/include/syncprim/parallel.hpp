#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>

namespace syncprim {

struct ScanOutcome {
  /// Least index for which the predicate failed.
  std::optional<std::uint64_t> first_failure;
  /// Number of failing indices; exact only for full scans.
  std::uint64_t failures = 0;
};

/// Evaluates `fails(i)` for every i in [0, count) on `threads` workers.
///
/// With stop_at_first, indices above the least failure seen so far are
/// skipped, yet every index below the final least failure is evaluated, so
/// first_failure does not depend on the thread count or the schedule. The
/// first exception thrown by a worker is rethrown after all workers stop.
ScanOutcome parallel_scan(std::uint64_t count, std::size_t threads, bool stop_at_first,
                          const std::function<bool(std::uint64_t)>& fails);

}  // namespace syncprim
