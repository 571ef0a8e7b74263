#pragma once

#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace dsq {

inline int default_jobs() {
  unsigned hc = std::thread::hardware_concurrency();
  return hc == 0 ? 1 : static_cast<int>(hc);
}

// Runs f(i) for i in [begin, end) across up to `jobs` threads. Callers are
// responsible for writing results into per-index slots so that the outcome is
// independent of the scheduling; this keeps parallel output deterministic.
inline void parallel_for(int jobs, int begin, int end, const std::function<void(int)>& f) {
  int count = end - begin;
  if (count <= 0)
    return;
  if (jobs < 1)
    jobs = 1;
  if (jobs == 1 || count == 1) {
    for (int i = begin; i < end; ++i)
      f(i);
    return;
  }
  int workers = std::min(jobs, count);
  std::vector<std::thread> pool;
  std::vector<std::exception_ptr> errors(workers);
  pool.reserve(workers);
  for (int w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      try {
        for (int i = begin + w; i < end; i += workers)
          f(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  for (auto& t : pool)
    t.join();
  for (auto& e : errors)
    if (e)
      std::rethrow_exception(e);
}

}  // namespace dsq
