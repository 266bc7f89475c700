#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

namespace citeheat::detail {

// out[i] = fn(i) for i in [0, n), split over at most `threads` workers in
// contiguous blocks. Output order never depends on the worker count.
template <class Fn>
std::vector<double> parallel_map(std::size_t n, unsigned threads, Fn fn) {
  std::vector<double> out(n);
  const std::size_t workers =
      std::clamp<std::size_t>(threads == 0 ? 1 : threads, 1, std::max<std::size_t>(n / 4096, 1));
  if (workers == 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = fn(i);
    return out;
  }
  {
    std::vector<std::jthread> pool;
    const std::size_t block = (n + workers - 1) / workers;
    for (std::size_t w = 0; w < workers; ++w) {
      const std::size_t begin = w * block;
      const std::size_t end = std::min(n, begin + block);
      if (begin >= end) break;
      pool.emplace_back([&out, &fn, begin, end] {
        for (std::size_t i = begin; i < end; ++i) out[i] = fn(i);
      });
    }
  }
  return out;
}

}  // namespace citeheat::detail
