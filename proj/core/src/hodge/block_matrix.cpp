#include "hpl/hodge/block_matrix.hpp"

#include "hpl/error.hpp"

namespace hpl::hodge {

BlockMatrix::BlockMatrix(Matrix entries, BlockPartition partition)
    : entries_(std::move(entries)), partition_(std::move(partition)) {
  int const m = partition_.dimension();
  if (entries_.rows() != m || entries_.cols() != m) {
    throw Error(ErrorKind::shape, "entries do not match the partition");
  }
}

BlockMatrix BlockMatrix::identity(BlockPartition const& partition) {
  int const m = partition.dimension();
  return BlockMatrix(Matrix::Identity(m, m), partition);
}

BlockMatrix BlockMatrix::zero(BlockPartition const& partition) {
  int const m = partition.dimension();
  return BlockMatrix(Matrix::Zero(m, m), partition);
}

Matrix BlockMatrix::block(int const alpha, int const beta) const {
  return entries_.block(partition_.offset(alpha), partition_.offset(beta),
                        partition_.size(alpha), partition_.size(beta));
}

void BlockMatrix::set_block(int const alpha, int const beta,
                            Matrix const& value) {
  if (value.rows() != partition_.size(alpha) ||
      value.cols() != partition_.size(beta)) {
    throw Error(ErrorKind::shape, "block has the wrong shape");
  }
  entries_.block(partition_.offset(alpha), partition_.offset(beta),
                 value.rows(), value.cols()) = value;
}

Matrix BlockMatrix::row_block(int const alpha) const {
  return entries_.middleRows(partition_.offset(alpha), partition_.size(alpha));
}

bool BlockMatrix::is_block_upper_unipotent(double const tol) const {
  for (int a = 0; a < block_count(); ++a) {
    int const s = partition_.size(a);
    if (max_norm(block(a, a) - Matrix::Identity(s, s)) > tol) {
      return false;
    }
  }
  return is_block_upper_triangular(tol);
}

bool BlockMatrix::is_block_lower_triangular(double const tol) const {
  for (int a = 0; a < block_count(); ++a) {
    for (int b = a + 1; b < block_count(); ++b) {
      if (max_norm(block(a, b)) > tol) {
        return false;
      }
    }
  }
  return true;
}

bool BlockMatrix::is_block_upper_triangular(double const tol) const {
  for (int a = 0; a < block_count(); ++a) {
    for (int b = 0; b < a; ++b) {
      if (max_norm(block(a, b)) > tol) {
        return false;
      }
    }
  }
  return true;
}

BlockMatrix operator*(BlockMatrix const& a, BlockMatrix const& b) {
  if (!(a.partition() == b.partition())) {
    throw Error(ErrorKind::shape, "partitions differ");
  }
  return BlockMatrix(a.entries() * b.entries(), a.partition());
}

HodgeFrame::HodgeFrame(Matrix rows, HodgeType type, double const tol)
    : rows_(std::move(rows)), type_(std::move(type)) {
  int const m = type_.dimension();
  if (rows_.rows() != m || rows_.cols() != m) {
    throw Error(ErrorKind::shape, "frame does not match the Hodge type");
  }
  Eigen::JacobiSVD<Matrix> svd(rows_);
  auto const& s = svd.singularValues();
  if (s(m - 1) <= tol * s(0)) {
    throw Error(ErrorKind::invalid_frame, "frame rows are not independent");
  }
}

Matrix HodgeFrame::group(int const alpha) const {
  auto const partition = type_.partition();
  return rows_.middleRows(partition.offset(alpha), partition.size(alpha));
}

Matrix HodgeFrame::filtration_piece(int const i) const {
  return rows_.topRows(type_.filtration_dim(i));
}

}  // namespace hpl::hodge
