#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <thread>
#include <vector>

namespace spectra::detail {

inline int thread_budget() {
  if (const char* env = std::getenv("SPECTRA_THREADS")) {
    const int v = std::atoi(env);
    if (v >= 1) return v;
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? static_cast<int>(hw) : 1;
}

// Splits [0, count) into contiguous chunks, one per worker. f(chunk_index,
// begin, end) must write only chunk-local state so merges stay deterministic.
template <class F>
int run_chunks(int64_t count, F&& f) {
  const int workers = std::max<int64_t>(1, std::min<int64_t>(thread_budget(), count));
  if (workers == 1) {
    f(0, int64_t{0}, count);
    return 1;
  }
  std::vector<std::thread> pool;
  const int64_t chunk = (count + workers - 1) / workers;
  for (int w = 0; w < workers; ++w) {
    const int64_t lo = w * chunk;
    const int64_t hi = std::min<int64_t>(count, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&f, w, lo, hi] { f(w, lo, hi); });
  }
  const int launched = static_cast<int>(pool.size());
  for (auto& t : pool) t.join();
  return launched;
}

}  // namespace spectra::detail
