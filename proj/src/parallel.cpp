#include "motifkit/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace motifkit {

unsigned worker_count()
{
  unsigned n = std::max(1u, std::thread::hardware_concurrency());
  if (char const *env = std::getenv("MOTIFKIT_THREADS")) {
    try {
      long const cap = std::stol(env);
      if (cap >= 1) { n = std::min<unsigned>(n, static_cast<unsigned>(cap)); }
    } catch (std::exception const &) {
      // unparsable: ignore the cap
    }
  }
  return n;
}

void parallel_for(std::size_t count, std::function<void(std::size_t)> const &body)
{
  unsigned const workers = static_cast<unsigned>(std::min<std::size_t>(worker_count(), count));
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) { body(i); }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr       failure;
  std::mutex               failure_mutex;
  {
    std::vector<std::jthread> pool;
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back([&] {
        for (std::size_t i = next++; i < count; i = next++) {
          try {
            body(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) { failure = std::current_exception(); }
          }
        }
      });
    }
  }
  if (failure) { std::rethrow_exception(failure); }
}

} // namespace motifkit
