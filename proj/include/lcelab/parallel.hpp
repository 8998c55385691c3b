#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <exception>
#include <string>
#include <type_traits>
#include <thread>
#include <vector>

namespace lcelab {

/// Worker count: LCE_LAB_THREADS if set to a positive integer, else the hardware count.
inline std::size_t worker_count() {
  if (const char* env = std::getenv("LCE_LAB_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<std::size_t>(v);
    } catch (const std::exception&) {
    }
  }
  return std::max<std::size_t>(1, std::thread::hardware_concurrency());
}

/// Splits [0, count) into contiguous chunks, evaluates body(begin, end) for
/// each chunk (concurrently when more than one worker is available) and returns
/// the chunk results in index order.  The first exception thrown by any chunk is
/// rethrown on the calling thread.
template <typename Body>
auto map_chunks(std::size_t count, Body&& body) {
  using Result = std::invoke_result_t<Body&, std::size_t, std::size_t>;
  const std::size_t workers = std::min(worker_count(), std::max<std::size_t>(1, count / 64));
  std::vector<Result> results(workers);
  if (workers == 1) {
    results[0] = body(std::size_t{0}, count);
    return results;
  }
  std::vector<std::exception_ptr> errors(workers);
  {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        try {
          results[w] = body(count * w / workers, count * (w + 1) / workers);
        } catch (...) {
          errors[w] = std::current_exception();
        }
      });
    }
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace lcelab
