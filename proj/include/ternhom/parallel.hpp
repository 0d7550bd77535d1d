#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace ternhom {

// Splits [0, count) into `jobs` contiguous chunks and runs
// fn(begin, end, chunk_index) on each, one thread per chunk. Chunk boundaries
// depend only on count and jobs, so per-chunk results merged in chunk order
// are deterministic. The first exception thrown by any chunk is rethrown.
template <typename Fn>
void parallel_chunks(std::size_t count, unsigned jobs, Fn&& fn) {
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(jobs, count));
  if (chunks == 1) {
    fn(std::size_t{0}, count, std::size_t{0});
    return;
  }
  std::vector<std::exception_ptr> errors(chunks);
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (std::size_t k = 0; k < chunks; ++k) {
    const std::size_t begin = count * k / chunks;
    const std::size_t end = count * (k + 1) / chunks;
    threads.emplace_back([&, begin, end, k] {
      try {
        fn(begin, end, k);
      } catch (...) {
        errors[k] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
}

}  // namespace ternhom
