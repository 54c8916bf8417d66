#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace kchroma::detail {

/// Runs fn(block_index, begin, end) over [0, count) cut into fixed blocks.
/// Blocks are handed out dynamically, but block boundaries do not depend on
/// the worker count, so per-block results merge identically for any schedule.
template <typename Fn>
void for_each_block(std::size_t count, std::size_t block_size, unsigned workers, Fn&& fn) {
  const std::size_t blocks = (count + block_size - 1) / block_size;
  auto run_block = [&](std::size_t b) {
    const std::size_t begin = b * block_size;
    fn(b, begin, std::min(count, begin + block_size));
  };
  if (workers <= 1 || blocks <= 1) {
    for (std::size_t b = 0; b < blocks; ++b) run_block(b);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::jthread> pool;
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(workers, blocks));
  pool.reserve(n);
  for (unsigned w = 0; w < n; ++w) {
    pool.emplace_back([&] {
      try {
        for (std::size_t b = next++; b < blocks; b = next++) run_block(b);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  pool.clear();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace kchroma::detail
