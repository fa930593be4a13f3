#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>

namespace whframes {

/// Worker count: WHFRAMES_THREADS if set and positive, else hardware concurrency.
unsigned worker_count();

/// Runs fn(i) for i in [0, n) on up to worker_count() threads.  The first
/// exception thrown by any task is rethrown after all workers finish.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& fn);

/// Generator for restart `index` of a run seeded with `seed`.
std::mt19937_64 restart_rng(std::uint64_t seed, std::uint64_t index);

}  // namespace whframes
