#ifndef SEIDEL_PARALLEL_HPP
#define SEIDEL_PARALLEL_HPP

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace seidel {

inline int default_worker_count() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

/// Splits [0, total) into `workers` contiguous intervals and calls fn(first, last, index) for each,
/// concurrently. Results are expected to be written to per-index slots and merged in index order.
template <class Fn>
void parallel_intervals(std::uint64_t total, int workers, Fn&& fn) {
  workers = std::max(1, workers);
  if (total < static_cast<std::uint64_t>(workers))
    workers = static_cast<int>(std::max<std::uint64_t>(1, total));
  if (workers == 1) {
    fn(std::uint64_t{0}, total, 0);
    return;
  }
  const std::uint64_t step = (total + static_cast<std::uint64_t>(workers) - 1) / static_cast<std::uint64_t>(workers);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  {
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      const std::uint64_t first = std::min(total, step * static_cast<std::uint64_t>(w));
      const std::uint64_t last = std::min(total, first + step);
      pool.emplace_back([&, first, last, w] {
        try {
          fn(first, last, w);
        } catch (...) {
          errors[static_cast<std::size_t>(w)] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);
}

} // namespace seidel

#endif
