#ifndef RLW_PARALLEL_HPP_
#define RLW_PARALLEL_HPP_

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <limits>
#include <thread>
#include <vector>

namespace rlw {

  // RLW_WORKERS, else the hardware concurrency.
  inline int default_workers() {
    if (char const* s = std::getenv("RLW_WORKERS")) {
      int w = std::atoi(s);
      if (w > 0) {
        return w;
      }
    }
    return std::max(1u, std::thread::hardware_concurrency());
  }

  // Runs body(i) for i in [0, count) on up to `workers` threads.
  inline void parallel_for(std::size_t count, int workers, std::function<void(std::size_t)> const& body) {
    workers = std::max(1, std::min<int>(workers, static_cast<int>(count)));
    if (workers <= 1) {
      for (std::size_t i = 0; i < count; ++i) {
        body(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (int w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          body(i);
        }
      });
    }
  }

  // Smallest i in [0, count) with pred(i), or count if there is none.
  // Indices above an already-found hit are skipped, so the answer does not
  // depend on the number of workers.
  inline std::size_t parallel_find_first(std::size_t                              count,
                                         int                                      workers,
                                         std::function<bool(std::size_t)> const& pred) {
    std::atomic<std::size_t> best{count};
    parallel_for(count, workers, [&](std::size_t i) {
      if (i >= best.load()) {
        return;
      }
      if (pred(i)) {
        std::size_t cur = best.load();
        while (i < cur && !best.compare_exchange_weak(cur, i)) {
        }
      }
    });
    return best.load();
  }

}  // namespace rlw

#endif  // RLW_PARALLEL_HPP_
