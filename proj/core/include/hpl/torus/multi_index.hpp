#pragma once

#include <cstdint>
#include <vector>

namespace hpl::torus {

// A strictly increasing multi-index, stored as a bit set.
using Mask = std::uint32_t;

int popcount(Mask mask);
int binomial(int n, int k);

// All subsets of {0, ..., n-1} of the given size, ordered lexicographically
// as increasing tuples.
std::vector<Mask> subsets(int n, int size);

std::vector<int> indices(Mask mask);

// Sign s with e_a ∧ e_b = s·e_{a∪b} for increasing monomials; 0 if a and b
// overlap.
int merge_sign(Mask a, Mask b);

// Lexicographic comparison of the increasing tuples of a and b.
bool tuple_less(Mask a, Mask b);

}  // namespace hpl::torus
