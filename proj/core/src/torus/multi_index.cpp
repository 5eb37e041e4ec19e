#include "hpl/torus/multi_index.hpp"

#include <algorithm>
#include <bit>

namespace hpl::torus {

int popcount(Mask const mask) { return std::popcount(mask); }

int binomial(int const n, int const k) {
  if (k < 0 || k > n) {
    return 0;
  }
  long result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * (n - k + i) / i;
  }
  return static_cast<int>(result);
}

namespace {

void extend(int const n, int const size, int const start, Mask const current,
            std::vector<Mask>& out) {
  if (size == 0) {
    out.push_back(current);
    return;
  }
  for (int i = start; i <= n - size; ++i) {
    extend(n, size - 1, i + 1, current | (Mask{1} << i), out);
  }
}

}  // namespace

std::vector<Mask> subsets(int const n, int const size) {
  std::vector<Mask> result;
  if (size >= 0 && size <= n) {
    extend(n, size, 0, 0, result);
  }
  return result;
}

std::vector<int> indices(Mask mask) {
  std::vector<int> result;
  for (int i = 0; mask != 0; ++i, mask >>= 1) {
    if (mask & 1) {
      result.push_back(i);
    }
  }
  return result;
}

int merge_sign(Mask const a, Mask const b) {
  if (a & b) {
    return 0;
  }
  // Each element of b passes over the elements of a that are larger.
  int inversions = 0;
  for (int const j : indices(b)) {
    inversions += std::popcount(a >> (j + 1));
  }
  return inversions % 2 == 0 ? 1 : -1;
}

bool tuple_less(Mask const a, Mask const b) {
  auto const ia = indices(a);
  auto const ib = indices(b);
  return std::ranges::lexicographical_compare(ia, ib);
}

}  // namespace hpl::torus
