#include "hpl/hodge/block_lu.hpp"

#include <cmath>

namespace hpl::hodge {

namespace {

double relative_determinant(Matrix const& m) {
  if (m.size() == 0) {
    return 1.0;
  }
  double const scale = max_norm(m);
  if (scale == 0.0) {
    return 0.0;
  }
  return std::abs((m / scale).partialPivLu().determinant());
}

// Reverses the order of the block groups, keeping the order inside a group.
Matrix reverse_blocks(Matrix const& m, BlockPartition const& partition) {
  int const count = partition.block_count();
  Matrix result(m.rows(), m.cols());
  BlockPartition const reversed = partition.reversed();
  for (int a = 0; a < count; ++a) {
    for (int b = 0; b < count; ++b) {
      int const ra = count - 1 - a;
      int const rb = count - 1 - b;
      result.block(reversed.offset(ra), reversed.offset(rb),
                   partition.size(a), partition.size(b)) =
          m.block(partition.offset(a), partition.offset(b), partition.size(a),
                  partition.size(b));
    }
  }
  return result;
}

}  // namespace

std::vector<double> leading_block_determinants(BlockMatrix const& a) {
  std::vector<double> result;
  for (int k = 0; k < a.block_count(); ++k) {
    int const end = a.partition().offset(k + 1);
    result.push_back(relative_determinant(a.entries().topLeftCorner(end, end)));
  }
  return result;
}

BlockLuOutcome block_lu(BlockMatrix const& a, double const tol) {
  BlockPartition const& partition = a.partition();
  int const m = a.dimension();
  Matrix work = a.entries();
  Matrix l = Matrix::Zero(m, m);
  Matrix u = Matrix::Zero(m, m);
  Complex leading_det = 1.0;
  for (int k = 0; k < a.block_count(); ++k) {
    int const begin = partition.offset(k);
    int const size = partition.size(k);
    int const end = begin + size;
    if (size == 0) {
      continue;
    }
    Matrix const pivot = work.block(begin, begin, size, size);
    auto const lu = pivot.partialPivLu();
    // det of the leading sub-matrix is the product of the Schur pivots.
    leading_det *= lu.determinant();
    double const scale = max_norm(a.entries().topLeftCorner(end, end));
    double const relative =
        scale == 0.0 ? 0.0 : std::abs(leading_det) / std::pow(scale, end);
    if (!(relative > tol) || lu.determinant() == Complex(0.0)) {
      return {std::nullopt, k};
    }
    l.block(begin, begin, size, size).setIdentity();
    l.block(begin, end, size, m - end) =
        lu.solve(work.block(begin, end, size, m - end));
    u.block(begin, begin, m - begin, size) =
        work.block(begin, begin, m - begin, size);
    work.block(end, end, m - end, m - end) -=
        work.block(end, begin, m - end, size) *
        l.block(begin, end, size, m - end);
  }
  return {BlockFactors{BlockMatrix(std::move(l), partition),
                       BlockMatrix(std::move(u), partition)},
          -1};
}

BlockLuOutcome block_ul(BlockMatrix const& a, double const tol) {
  BlockPartition const& partition = a.partition();
  BlockPartition const reversed = partition.reversed();
  BlockMatrix const mirrored(
      reverse_blocks(a.entries(), partition).transpose(), reversed);
  BlockLuOutcome const outcome = block_lu(mirrored, tol);
  int const last = partition.block_count() - 1;
  if (!outcome.ok()) {
    return {std::nullopt, last - outcome.failed_block};
  }
  // mirrored = U·L, so reverse(a) = Lᵀ·Uᵀ.
  Matrix l = reverse_blocks(outcome.factors->l.entries().transpose(), reversed);
  Matrix u = reverse_blocks(outcome.factors->u.entries().transpose(), reversed);
  return {BlockFactors{BlockMatrix(std::move(l), partition),
                       BlockMatrix(std::move(u), partition)},
          -1};
}

bool in_unipotent_orbit(BlockMatrix const& a, double const tol) {
  for (double const det : leading_block_determinants(a)) {
    if (!(det > tol)) {
      return false;
    }
  }
  return true;
}

}  // namespace hpl::hodge
