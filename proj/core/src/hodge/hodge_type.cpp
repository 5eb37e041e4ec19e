#include "hpl/hodge/hodge_type.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "hpl/error.hpp"

namespace hpl::hodge {

std::vector<int> filtration_dims(std::vector<int> const& hodge_numbers) {
  if (hodge_numbers.empty()) {
    throw Error(ErrorKind::invalid_hodge_type, "empty Hodge numbers");
  }
  if (std::ranges::any_of(hodge_numbers, [](int h) { return h < 0; })) {
    throw Error(ErrorKind::invalid_hodge_type, "negative Hodge number");
  }
  std::vector<int> result(hodge_numbers.size());
  std::partial_sum(hodge_numbers.begin(), hodge_numbers.end(), result.begin());
  if (result.back() == 0) {
    throw Error(ErrorKind::invalid_hodge_type, "all Hodge numbers vanish");
  }
  return result;
}

BlockPartition::BlockPartition(std::vector<int> boundaries)
    : boundaries_(std::move(boundaries)) {
  if (boundaries_.size() < 2 || boundaries_.front() != 0) {
    throw Error(ErrorKind::shape, "partition must start at 0 and have a block");
  }
  if (!std::ranges::is_sorted(boundaries_)) {
    throw Error(ErrorKind::shape, "partition boundaries must be increasing");
  }
}

BlockPartition BlockPartition::from_sizes(std::vector<int> const& sizes) {
  std::vector<int> boundaries{0};
  for (int s : sizes) {
    if (s < 0) {
      throw Error(ErrorKind::shape, "negative block size");
    }
    boundaries.push_back(boundaries.back() + s);
  }
  return BlockPartition(std::move(boundaries));
}

BlockPartition BlockPartition::reversed() const {
  std::vector<int> sizes;
  for (int a = block_count() - 1; a >= 0; --a) {
    sizes.push_back(size(a));
  }
  return from_sizes(sizes);
}

HodgeType::HodgeType(std::vector<int> hodge_numbers)
    : hodge_numbers_(std::move(hodge_numbers)),
      filtration_(hpl::hodge::filtration_dims(hodge_numbers_)) {}

int HodgeType::filtration_dim(int const i) const {
  int const n = weight();
  if (i > n) {
    return 0;
  }
  if (i < 0) {
    return dimension();
  }
  return filtration_[n - i];
}

BlockPartition HodgeType::partition() const {
  return BlockPartition::from_sizes(hodge_numbers_);
}

Polarization::Polarization(Matrix q, Parity const parity, bool)
    : q_(std::move(q)), parity_(parity) {}

Polarization::Polarization(Matrix q, Parity const parity, double const tol)
    : q_(std::move(q)), parity_(parity) {
  if (q_.rows() != q_.cols() || q_.rows() == 0) {
    throw Error(ErrorKind::shape, "polarization must be a non-empty square");
  }
  double const sign = parity == Parity::symmetric ? 1.0 : -1.0;
  double const scale = std::max(1.0, max_norm(q_));
  if (max_norm(q_ - sign * q_.transpose()) > tol * scale) {
    throw Error(ErrorKind::shape,
                parity == Parity::symmetric ? "polarization is not symmetric"
                                            : "polarization is not skew");
  }
  Eigen::JacobiSVD<Matrix> svd(q_);
  auto const& s = svd.singularValues();
  if (s(s.size() - 1) <= tol * s(0)) {
    throw Error(ErrorKind::shape, "polarization is degenerate");
  }
}

Polarization Polarization::for_weight(Matrix q, int const weight,
                                      double const tol) {
  return Polarization(std::move(q),
                      weight % 2 == 0 ? Parity::symmetric : Parity::skew, tol);
}

Polarization Polarization::unchecked(Matrix q, Parity const parity) {
  return Polarization(std::move(q), parity, true);
}

Complex Polarization::operator()(Vector const& u, Vector const& v) const {
  return u.transpose() * q_ * v;
}

}  // namespace hpl::hodge
