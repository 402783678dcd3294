// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Core>
#include <vector>

namespace blocksplit {

/// Element of a product space H_1 x ... x H_m of Euclidean spaces.
///
/// Blocks are stored contiguously per block (one vector each) so that
/// per-block updates touch only the selected blocks. The norm is the
/// Euclidean norm of the concatenation.
class BlockVector {
 public:
  BlockVector() = default;

  /// Zero vector with the given per-block dimensions.
  explicit BlockVector(std::vector<Eigen::Index> dims);

  static BlockVector from_blocks(std::vector<Eigen::VectorXd> blocks);

  Eigen::Index block_count() const { return static_cast<Eigen::Index>(blocks_.size()); }
  Eigen::Index dim(Eigen::Index i) const { return dims_[static_cast<std::size_t>(i)]; }
  const std::vector<Eigen::Index>& dims() const { return dims_; }
  Eigen::Index total_dim() const;

  Eigen::VectorXd& block(Eigen::Index i) { return blocks_[static_cast<std::size_t>(i)]; }
  const Eigen::VectorXd& block(Eigen::Index i) const {
    return blocks_[static_cast<std::size_t>(i)];
  }

  void set_zero();
  bool same_shape(const BlockVector& other) const { return dims_ == other.dims_; }

  double squared_norm() const;
  double norm() const;
  double dot(const BlockVector& other) const;

  BlockVector& operator+=(const BlockVector& other);
  BlockVector& operator-=(const BlockVector& other);
  BlockVector& operator*=(double s);

  friend BlockVector operator+(BlockVector a, const BlockVector& b) { return a += b; }
  friend BlockVector operator-(BlockVector a, const BlockVector& b) { return a -= b; }
  friend BlockVector operator*(double s, BlockVector a) { return a *= s; }

  /// Concatenation into a flat vector, block order preserved.
  Eigen::VectorXd to_flat() const;
  /// Scatter a flat vector of matching total dimension back into blocks.
  void assign_from_flat(const Eigen::Ref<const Eigen::VectorXd>& flat);

  bool operator==(const BlockVector& other) const;

 private:
  std::vector<Eigen::VectorXd> blocks_;
  std::vector<Eigen::Index> dims_;
};

}  // namespace blocksplit
