#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace bpb {

/// Worker count: hardware concurrency, capped by BPB_THREADS and by
/// requested when it is non-zero.
std::size_t thread_count(std::size_t requested = 0);

/// Calls body(begin, end) on contiguous chunks of [0, n). Chunks are fixed by
/// n and the worker count only, and callers write results by index, so
/// reductions done afterwards are independent of scheduling.
template <class Body>
void parallel_for(std::size_t n, std::size_t threads, Body&& body) {
  const std::size_t workers = std::min(std::max<std::size_t>(threads, 1), std::max<std::size_t>(n, 1));
  if (workers <= 1 || n < 64) {
    body(std::size_t{0}, n);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 1; w < workers; ++w) {
    const std::size_t lo = w * chunk;
    const std::size_t hi = std::min(n, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([&body, lo, hi] { body(lo, hi); });
  }
  body(std::size_t{0}, std::min(n, chunk));
  for (auto& t : pool) t.join();
}

/// Evaluates value(i) for i in [0, n) in parallel and returns the index of
/// the maximum, lowest index on ties. Returns n when every value is NaN or
/// n == 0.
template <class Value>
std::size_t parallel_argmax(std::size_t n, std::size_t threads, Value&& value, std::vector<double>* out = nullptr) {
  std::vector<double> v(n);
  parallel_for(n, threads, [&](std::size_t lo, std::size_t hi) {
    for (std::size_t i = lo; i < hi; ++i) v[i] = value(i);
  });
  std::size_t best = n;
  for (std::size_t i = 0; i < n; ++i) {
    if (v[i] == v[i] && (best == n || v[i] > v[best])) best = i;
  }
  if (out) *out = std::move(v);
  return best;
}

}  // namespace bpb
