#pragma once

#include "hpl/hodge/hodge_type.hpp"
#include "hpl/types.hpp"

namespace hpl::hodge {

class BlockMatrix {
 public:
  BlockMatrix(Matrix entries, BlockPartition partition);
  static BlockMatrix identity(BlockPartition const& partition);
  static BlockMatrix zero(BlockPartition const& partition);

  Matrix const& entries() const { return entries_; }
  BlockPartition const& partition() const { return partition_; }
  int dimension() const { return partition_.dimension(); }
  int block_count() const { return partition_.block_count(); }

  // Rows of group α, columns of group β.
  Matrix block(int alpha, int beta) const;
  void set_block(int alpha, int beta, Matrix const& value);
  // All columns of row group α.
  Matrix row_block(int alpha) const;

  bool is_block_upper_unipotent(double tol = 0.0) const;
  bool is_block_lower_triangular(double tol = 0.0) const;
  bool is_block_upper_triangular(double tol = 0.0) const;

 private:
  Matrix entries_;
  BlockPartition partition_;
};

BlockMatrix operator*(BlockMatrix const& a, BlockMatrix const& b);

// Rows are basis vectors in the fixed reference basis; the first f^k rows
// span F^k. This is the transpose of a column-vector arrangement.
class HodgeFrame {
 public:
  HodgeFrame(Matrix rows, HodgeType type, double tol = 1e-12);

  Matrix const& rows() const { return rows_; }
  HodgeType const& hodge_type() const { return type_; }
  // Rows of Hodge group α, i.e. of type (n-α, α) for a decomposition frame.
  Matrix group(int alpha) const;
  // First f^i rows.
  Matrix filtration_piece(int i) const;

 private:
  Matrix rows_;
  HodgeType type_;
};

}  // namespace hpl::hodge
