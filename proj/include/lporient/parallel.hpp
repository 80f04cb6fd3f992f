#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace lporient {

inline int resolve_threads(int requested) {
  if (requested < 1) return 1;
  return requested;
}

/// Splits [0, count) into at most `threads` contiguous blocks, runs
/// `work(begin, end, block_index)` on each, then merges block results in
/// block order. Output is independent of scheduling, so any reduction is
/// deterministic, commutative or not.
template <class Local>
std::vector<Local> parallel_blocks(
    std::size_t count, int threads,
    const std::function<Local(std::size_t, std::size_t, int)>& work) {
  threads = resolve_threads(threads);
  int blocks = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(threads), count));
  if (blocks <= 1) {
    std::vector<Local> out;
    if (count > 0) out.push_back(work(0, count, 0));
    return out;
  }
  std::vector<Local> results(blocks);
  std::vector<std::thread> pool;
  std::size_t chunk = count / blocks, extra = count % blocks;
  std::size_t begin = 0;
  for (int b = 0; b < blocks; ++b) {
    std::size_t end = begin + chunk + (static_cast<std::size_t>(b) < extra);
    pool.emplace_back([&, b, begin, end] { results[b] = work(begin, end, b); });
    begin = end;
  }
  for (auto& t : pool) t.join();
  return results;
}

}  // namespace lporient
