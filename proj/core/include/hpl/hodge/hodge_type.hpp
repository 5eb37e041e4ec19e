#pragma once

#include <vector>

#include "hpl/types.hpp"

namespace hpl::hodge {

// Partial sums f^n, ..., f^0 of h^{n,0}, ..., h^{0,n}.
std::vector<int> filtration_dims(std::vector<int> const& hodge_numbers);

// Row/column groups of an m x m matrix. Group α spans [offset(α), offset(α+1)),
// which for a Hodge type is [f^{n+1-α}, f^{n-α}).
class BlockPartition {
 public:
  // boundaries = (0, b_1, ..., m), weakly increasing.
  explicit BlockPartition(std::vector<int> boundaries);
  static BlockPartition from_sizes(std::vector<int> const& sizes);

  int block_count() const { return static_cast<int>(boundaries_.size()) - 1; }
  int dimension() const { return boundaries_.back(); }
  int offset(int alpha) const { return boundaries_[alpha]; }
  int size(int alpha) const {
    return boundaries_[alpha + 1] - boundaries_[alpha];
  }
  std::vector<int> const& boundaries() const { return boundaries_; }
  BlockPartition reversed() const;

  bool operator==(BlockPartition const&) const = default;

 private:
  std::vector<int> boundaries_;
};

class HodgeType {
 public:
  // hodge_numbers = (h^{n,0}, ..., h^{0,n}); the weight is its length - 1.
  explicit HodgeType(std::vector<int> hodge_numbers);

  int weight() const { return static_cast<int>(hodge_numbers_.size()) - 1; }
  int dimension() const { return filtration_.back(); }
  std::vector<int> const& hodge_numbers() const { return hodge_numbers_; }
  // h^{p,n-p}.
  int hodge_number(int p) const { return hodge_numbers_[weight() - p]; }
  // f^i for 0 <= i <= n+1.
  int filtration_dim(int i) const;
  // (f^n, ..., f^0).
  std::vector<int> const& filtration_dims() const { return filtration_; }
  BlockPartition partition() const;

  bool operator==(HodgeType const&) const = default;

 private:
  std::vector<int> hodge_numbers_;
  std::vector<int> filtration_;
};

enum class Parity { symmetric, skew };

class Polarization {
 public:
  // Validates the parity and non-degeneracy: the smallest singular value must
  // exceed tol times the largest.
  Polarization(Matrix q, Parity parity, double tol = 1e-10);
  static Polarization for_weight(Matrix q, int weight, double tol = 1e-10);
  // No validation; for diagnostics on deliberately broken inputs.
  static Polarization unchecked(Matrix q, Parity parity);

  Matrix const& matrix() const { return q_; }
  Parity parity() const { return parity_; }
  int dimension() const { return static_cast<int>(q_.rows()); }

  // Q(u, v) = uᵀ Q v, bilinear.
  Complex operator()(Vector const& u, Vector const& v) const;

 private:
  Polarization(Matrix q, Parity parity, bool);

  Matrix q_;
  Parity parity_;
};

}  // namespace hpl::hodge
