#pragma once

// Partitioned exact summation. Exact addition is associative, so the
// result never depends on how the index range is split or how many
// workers run.

#include <cstddef>
#include <functional>

#include "atanid/exact.hpp"

namespace atanid {

/// Name of the environment variable that caps the worker count.
inline constexpr const char* kWorkerEnvVar = "ATANID_WORKERS";

/// Worker count from ATANID_WORKERS, else hardware concurrency (at least 1).
unsigned default_worker_count();

/// Sums block(begin, end) over a partition of [first, last) into at most
/// `workers` contiguous blocks evaluated concurrently; blocks are combined
/// in index order. `block` must be safe to call concurrently.
BigRational partitioned_sum(std::size_t first, std::size_t last, unsigned workers,
                            const std::function<BigRational(std::size_t, std::size_t)>& block);

}  // namespace atanid
