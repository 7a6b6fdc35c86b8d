#pragma once

// Minimal worker-pool helper. Results must be written into preassigned slots
// so the output does not depend on scheduling.

#include <atomic>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace graphalg {

inline void parallel_for(size_t count, int jobs, const std::function<void(size_t)>& body) {
  if (jobs <= 1 || count < 2) {
    for (size_t i = 0; i < count; i++) body(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::exception_ptr err;
  std::mutex err_mx;
  auto worker = [&]() {
    while (true) {
      size_t i = next.fetch_add(1);
      if (i >= count) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard lk(err_mx);
        if (!err) err = std::current_exception();
        return;
      }
    }
  };
  std::vector<std::thread> pool;
  for (int t = 0; t < jobs; t++) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  if (err) std::rethrow_exception(err);
}

}  // namespace graphalg
