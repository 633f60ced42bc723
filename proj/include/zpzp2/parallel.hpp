#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <thread>
#include <vector>

namespace zpzp2 {

/// Limits and knobs shared by every expensive computation.
struct ComputeOptions {
  std::uint64_t max_codewords = std::uint64_t{1} << 21;
  std::uint64_t max_symbol_ops = 10'000'000'000ULL;
  unsigned workers = 0;  // 0: hardware concurrency
  std::uint64_t seed = 0x5EEDC0DEULL;
  std::size_t distance_samples = 1000;
};

inline unsigned resolve_workers(unsigned requested) noexcept {
  if (requested > 0) return requested;
  return std::max(1u, std::thread::hardware_concurrency());
}

/// Splits [0, n) into contiguous chunks and runs fn(begin, end, chunk) on each.
/// Runs inline when one worker suffices or n < min_chunk.
template <class Fn>
void parallel_chunks(std::size_t n, unsigned workers, Fn&& fn, std::size_t min_chunk = 64) {
  const unsigned w = static_cast<unsigned>(
      std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(1, n / min_chunk)));
  if (w <= 1) {
    fn(std::size_t{0}, n, 0u);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(w);
  const std::size_t step = (n + w - 1) / w;
  for (unsigned c = 0; c < w; ++c) {
    const std::size_t b = std::min(n, std::size_t{c} * step), e = std::min(n, b + step);
    pool.emplace_back([&fn, b, e, c] { fn(b, e, c); });
  }
}

/// Runs fn(worker, worker_count) on each worker; fn picks its own interleaved
/// indices. Used for triangular pair scans where contiguous chunks are unbalanced.
template <class Fn>
void parallel_interleaved(std::size_t n, unsigned workers, Fn&& fn, std::size_t min_items = 64) {
  const unsigned w = static_cast<unsigned>(
      std::min<std::size_t>(resolve_workers(workers), std::max<std::size_t>(1, n / min_items)));
  if (w <= 1) {
    fn(0u, 1u);
    return;
  }
  std::vector<std::jthread> pool;
  pool.reserve(w);
  for (unsigned c = 0; c < w; ++c) pool.emplace_back([&fn, c, w] { fn(c, w); });
}

}  // namespace zpzp2
