#pragma once

#include <optional>
#include <vector>

#include "hpl/hodge/block_matrix.hpp"

namespace hpl::hodge {

// l is block upper triangular with identity diagonal blocks (the unipotent
// chart N₋); u is block lower triangular.
struct BlockFactors {
  BlockMatrix l;
  BlockMatrix u;
};

struct BlockLuOutcome {
  std::optional<BlockFactors> factors;
  // Block index k of the first singular leading (or, for block_ul, trailing)
  // principal block sub-matrix; -1 on success.
  int failed_block = -1;

  bool ok() const { return factors.has_value(); }
};

// |det| of the leading principal block sub-matrices (blocks 0..k), each
// divided by its max-norm to the power of its size.
std::vector<double> leading_block_determinants(BlockMatrix const& a);

// a = u·l by Schur elimination block column by block column. The rows of
// a and of l span the same filtration, so l is the period matrix of the
// frame a. Fails at the first k whose leading principal block sub-matrix has
// relative |det| ≤ tol.
BlockLuOutcome block_lu(BlockMatrix const& a, double tol = 1e-10);

// a = l·u with the same factor shapes; governed by the trailing principal
// block sub-matrices, reported with their starting block index.
BlockLuOutcome block_ul(BlockMatrix const& a, double tol = 1e-10);

// All leading principal block sub-matrices have relative |det| > tol.
bool in_unipotent_orbit(BlockMatrix const& a, double tol = 1e-10);

}  // namespace hpl::hodge
