#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace smashhom::detail {

/// Runs fn(0..count-1) on up to `jobs` threads. Callers merge results in
/// index order, so parallel runs produce the same output as jobs == 1.
template <typename F>
void run_jobs(size_t count, int jobs, F&& fn) {
  const size_t nthreads = jobs <= 1 ? 1 : std::min<size_t>(static_cast<size_t>(jobs), count);
  if (nthreads <= 1) {
    for (size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<size_t> next{0};
  std::vector<std::exception_ptr> errors(nthreads);
  std::vector<std::thread> pool;
  pool.reserve(nthreads);
  for (size_t t = 0; t < nthreads; ++t) {
    pool.emplace_back([&, t] {
      try {
        for (size_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) fn(i);
      } catch (...) {
        errors[t] = std::current_exception();
      }
    });
  }
  for (auto& th : pool) th.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace smashhom::detail
