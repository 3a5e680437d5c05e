#include "semap/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace semap {

namespace {

thread_local bool in_parallel_region = false;

template <class Work>
void run_workers(int workers, Work work) {
  std::exception_ptr first;
  std::mutex mu;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      in_parallel_region = true;
      try {
        work(w);
      } catch (...) {
        std::lock_guard<std::mutex> lock(mu);
        if (!first) first = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  if (first) std::rethrow_exception(first);
}

}  // namespace

int thread_count() {
  if (const char* env = std::getenv("SEMAP_THREADS")) {
    int n = 0;
    const char* end = env + std::strlen(env);
    auto [p, ec] = std::from_chars(env, end, n);
    if (ec == std::errc() && p == end && n > 0) return n;
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_chunks(int n, const std::function<void(int, int)>& body) {
  if (n <= 0) return;
  const int workers = std::min(n, thread_count());
  if (workers <= 1 || in_parallel_region) {
    body(0, n);
    return;
  }
  run_workers(workers, [&](int w) {
    const int begin = static_cast<int>(static_cast<long long>(n) * w / workers);
    const int end = static_cast<int>(static_cast<long long>(n) * (w + 1) / workers);
    if (begin < end) body(begin, end);
  });
}

void parallel_for(int n, const std::function<void(int)>& body) {
  if (n <= 0) return;
  const int workers = std::min(n, thread_count());
  if (workers <= 1 || in_parallel_region) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::atomic<int> next{0};
  run_workers(workers, [&](int) {
    for (int i = next++; i < n; i = next++) body(i);
  });
}

}  // namespace semap
