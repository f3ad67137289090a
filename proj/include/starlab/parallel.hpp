#pragma once

#include <algorithm>
#include <cstddef>
#include <thread>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace starlab {

using Bits = boost::dynamic_bitset<std::uint64_t>;

/// Calls body(i) for every i in [0, count), splitting the range into
/// contiguous blocks of leading indices across worker threads. The body must
/// only write to state owned by index i; callers reduce results afterwards in
/// index order so the outcome never depends on scheduling.
template <typename Body>
void parallel_for(std::size_t count, Body&& body, std::size_t min_block = 16) {
  const std::size_t hw = std::max<std::size_t>(1, std::thread::hardware_concurrency());
  const std::size_t workers = std::min(hw, std::max<std::size_t>(1, count / min_block));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  const std::size_t block = (count + workers - 1) / workers;
  std::vector<std::jthread> threads;
  threads.reserve(workers);
  for (std::size_t w = 0; w < workers; ++w) {
    const std::size_t begin = w * block;
    const std::size_t end = std::min(count, begin + block);
    if (begin >= end) break;
    threads.emplace_back([&body, begin, end] {
      for (std::size_t i = begin; i < end; ++i) body(i);
    });
  }
}

}  // namespace starlab
