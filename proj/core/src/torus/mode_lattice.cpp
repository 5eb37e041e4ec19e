#include "hpl/torus/mode_lattice.hpp"

#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <utility>

#include "hpl/error.hpp"

namespace hpl::torus {

ModeLattice const& ModeLattice::get(int const dims, int const band) {
  if (dims < 1 || band < 0) {
    throw Error(ErrorKind::shape, "invalid mode lattice");
  }
  static std::mutex mutex;
  static std::map<std::pair<int, int>, std::unique_ptr<ModeLattice>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{dims, band}];
  if (!slot) {
    slot.reset(new ModeLattice(dims, band));
  }
  return *slot;
}

ModeLattice::ModeLattice(int const dims, int const band)
    : dims_(dims), band_(band), size_(1), offset_(0), strides_(dims) {
  long const s = side();
  for (int j = dims - 1; j >= 0; --j) {
    strides_[j] = (j == dims - 1) ? 1 : strides_[j + 1] * s;
  }
  for (int j = 0; j < dims; ++j) {
    size_ *= static_cast<int>(s);
    offset_ += band * strides_[j];
  }
  modes_.resize(static_cast<std::size_t>(size_) * dims);
  for (int i = 0; i < size_; ++i) {
    long rest = i;
    for (int j = 0; j < dims; ++j) {
      modes_[static_cast<std::size_t>(i) * dims + j] =
          static_cast<int>(rest / strides_[j]) - band;
      rest %= strides_[j];
    }
  }
}

int ModeLattice::max_abs(int const index) const {
  int result = 0;
  for (int const k : mode(index)) {
    result = std::max(result, std::abs(k));
  }
  return result;
}

int ModeLattice::index(std::span<int const> const mode) const {
  for (int const k : mode) {
    if (std::abs(k) > band_) {
      return -1;
    }
  }
  return static_cast<int>(linear(mode) + offset_);
}

long ModeLattice::linear(std::span<int const> const mode) const {
  long result = 0;
  for (int j = 0; j < dims_; ++j) {
    result += mode[j] * strides_[j];
  }
  return result;
}

std::vector<int> ModeLattice::embedding_of(ModeLattice const& inner) const {
  if (inner.dims_ != dims_ || inner.band_ > band_) {
    throw Error(ErrorKind::shape, "lattice does not embed");
  }
  std::vector<int> result(inner.size_);
  for (int i = 0; i < inner.size_; ++i) {
    result[i] = index(inner.mode(i));
  }
  return result;
}

}  // namespace hpl::torus
