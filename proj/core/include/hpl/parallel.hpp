#pragma once

#include <cstddef>
#include <functional>

namespace hpl {

// Worker count from HPL_THREADS, capped by the hardware; at least 1.
unsigned thread_count();

// Runs body(i) for i in [0, n). Each index is handled by exactly one worker,
// so results written to slot i are independent of scheduling.
void parallel_for(std::size_t n, std::function<void(std::size_t)> const& body);

}  // namespace hpl
