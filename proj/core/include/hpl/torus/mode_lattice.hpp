#pragma once

#include <span>
#include <vector>

namespace hpl::torus {

// The modes k ∈ ℤ^dims with |k|_∞ ≤ band, ordered lexicographically with the
// first coordinate most significant. Negation maps index i to size-1-i.
class ModeLattice {
 public:
  // Shared, immutable instances.
  static ModeLattice const& get(int dims, int band);

  int dims() const { return dims_; }
  int band() const { return band_; }
  int side() const { return 2 * band_ + 1; }
  int size() const { return size_; }
  int zero_index() const { return (size_ - 1) / 2; }
  int negated(int index) const { return size_ - 1 - index; }

  std::span<int const> mode(int index) const {
    return {modes_.data() + static_cast<std::size_t>(index) * dims_,
            static_cast<std::size_t>(dims_)};
  }
  int max_abs(int index) const;
  // -1 if the mode lies outside the band.
  int index(std::span<int const> mode) const;

  // linear(k) = Σ k_j·stride_j; index(k) = linear(k) + offset().
  long linear(std::span<int const> mode) const;
  long offset() const { return offset_; }

  // For each mode of `inner` (band ≤ this band), its index here.
  std::vector<int> embedding_of(ModeLattice const& inner) const;

 private:
  ModeLattice(int dims, int band);

  int dims_;
  int band_;
  int size_;
  long offset_;
  std::vector<long> strides_;
  std::vector<int> modes_;
};

}  // namespace hpl::torus
