#pragma once

#include <cstddef>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace waves {

/// Worker count: WAVES_THREADS when set and positive, else the hardware count.
inline unsigned worker_count() {
  if (const char* env = std::getenv("WAVES_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<unsigned>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Evaluates f(i) for i in [0, n) on up to worker_count() threads and returns
/// the results in index order. The first exception is rethrown.
template <class T>
std::vector<T> parallel_map(std::size_t n, const std::function<T(std::size_t)>& f) {
  std::vector<T> out(n);
  const std::size_t workers = std::min<std::size_t>(worker_count(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = f(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < n; i += workers) out[i] = f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace waves
