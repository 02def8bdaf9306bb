#include "meshkit/enumerate.hpp"

#include <atomic>
#include <exception>
#include <mutex>
#include <thread>

namespace meshkit {

unsigned hardware_workers() { return std::max(1u, std::thread::hardware_concurrency()); }

void run_partitions(int parts, unsigned workers, const std::function<void(int)>& task) {
  const unsigned threads = std::min<unsigned>(std::max(1u, workers), static_cast<unsigned>(std::max(parts, 1)));
  if (threads <= 1) {
    for (int p = 0; p < parts; ++p) task(p);
    return;
  }
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  {
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
      pool.emplace_back([&] {
        for (int p = next++; p < parts; p = next++) {
          try {
            task(p);
          } catch (...) {
            std::lock_guard lock(error_mutex);
            if (!error) error = std::current_exception();
          }
        }
      });
    }
  }
  if (error) std::rethrow_exception(error);
}

}  // namespace meshkit
