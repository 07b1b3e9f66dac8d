#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

#include "slicepoly/numeric.hpp"

namespace slicepoly {

/// Runs fn(i) for i in [0, count) over caps().threads workers in contiguous chunks.
template <class Fn>
void parallel_for(std::size_t count, Fn&& fn) {
  const std::size_t workers = std::max<std::size_t>(1, std::min<std::size_t>(caps().threads, count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::size_t chunk = (count + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w)
    pool.emplace_back([&, w] {
      for (std::size_t i = w * chunk; i < std::min(count, (w + 1) * chunk); ++i) fn(i);
    });
  for (auto& t : pool) t.join();
}

}  // namespace slicepoly
