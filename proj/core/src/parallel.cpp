#include "hpl/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

namespace hpl {

unsigned thread_count() {
  unsigned hardware = std::max(1u, std::thread::hardware_concurrency());
  if (char const* env = std::getenv("HPL_THREADS")) {
    try {
      long const requested = std::stol(env);
      if (requested >= 1) {
        return std::min<unsigned>(hardware, static_cast<unsigned>(requested));
      }
    } catch (std::exception const&) {
    }
  }
  return hardware;
}

void parallel_for(std::size_t const n,
                  std::function<void(std::size_t)> const& body) {
  unsigned const workers =
      static_cast<unsigned>(std::min<std::size_t>(thread_count(), n));
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) {
      body(i);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < n; i = next++) {
        try {
          body(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) {
            failure = std::current_exception();
          }
        }
      }
    });
  }
  for (auto& thread : pool) {
    thread.join();
  }
  if (failure) {
    std::rethrow_exception(failure);
  }
}

}  // namespace hpl
