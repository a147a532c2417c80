#include "fatoukit/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace fatoukit {

namespace {
std::atomic<int> g_threads{0};
}

void set_default_threads(int n) { g_threads = std::max(n, 0); }

int default_threads() {
  const int n = g_threads.load();
  if (n > 0) return n;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_rows(int rows, int threads, const std::function<void(int, int)>& body) {
  if (rows <= 0) return;
  int workers = threads > 0 ? threads : default_threads();
  workers = std::clamp(workers, 1, rows);
  if (workers == 1) {
    body(0, rows);
    return;
  }
  // More bands than workers evens out rows that cost more than others.
  const int bands = std::min(rows, workers * 4);
  std::atomic<int> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (int b = next++; b < bands; b = next++) {
        const int begin = static_cast<int>(static_cast<long long>(rows) * b / bands);
        const int end = static_cast<int>(static_cast<long long>(rows) * (b + 1) / bands);
        try {
          body(begin, end);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!error) error = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace fatoukit
