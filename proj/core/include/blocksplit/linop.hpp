// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Core>
#include <cstdint>
#include <memory>
#include <vector>

namespace blocksplit {

enum class LinOpKind { dense, row_functional, structured };

/// A linear map between Euclidean spaces with an explicit adjoint.
///
/// Implementations must satisfy <L x, y> = <x, L* y> for all x, y.
class LinOp {
 public:
  LinOp(Eigen::Index out_dim, Eigen::Index in_dim);
  virtual ~LinOp() = default;

  /// Codomain dimension.
  Eigen::Index rows() const { return out_; }
  /// Domain dimension.
  Eigen::Index cols() const { return in_; }

  virtual LinOpKind kind() const = 0;

  /// y = L x.
  virtual void apply(const Eigen::Ref<const Eigen::VectorXd>& x,
                     Eigen::Ref<Eigen::VectorXd> y) const = 0;
  /// w = L* v.
  virtual void apply_adjoint(const Eigen::Ref<const Eigen::VectorXd>& v,
                             Eigen::Ref<Eigen::VectorXd> w) const = 0;

  Eigen::VectorXd apply(const Eigen::Ref<const Eigen::VectorXd>& x) const;
  Eigen::VectorXd apply_adjoint(const Eigen::Ref<const Eigen::VectorXd>& v) const;

  /// Dense materialization. The default probes the operator with basis
  /// vectors; concrete operators override with a direct construction.
  virtual Eigen::MatrixXd to_dense() const;

  /// Estimated multiply-accumulate count of one apply (or adjoint apply).
  virtual std::uint64_t mac_cost() const {
    return static_cast<std::uint64_t>(rows()) * static_cast<std::uint64_t>(cols());
  }

 private:
  Eigen::Index out_;
  Eigen::Index in_;
};

using LinOpPtr = std::shared_ptr<const LinOp>;

/// Dense matrix operator.
LinOpPtr dense_op(Eigen::MatrixXd a);

/// Rank-one row functional x -> <x, u>, mapping R^n to R.
LinOpPtr row_functional_op(Eigen::VectorXd u);

/// Coordinate gather x -> (x[idx_0], ..., x[idx_{r-1}]). The adjoint
/// scatters back into a zero vector.
LinOpPtr row_selector_op(Eigen::Index in_dim, std::vector<Eigen::Index> indices);

/// Scalar multiple of the identity on R^dim.
LinOpPtr scaled_identity_op(Eigen::Index dim, double scale);

/// Forward differences of a side x side image (row-major pixels), horizontal
/// then vertical, stacked into R^{2N}. Uses a replicating boundary, so the
/// last column (resp. row) of horizontal (resp. vertical) differences is 0.
/// Output pair j of an l12 coupling is (horizontal_j, vertical_j).
LinOpPtr forward_difference_2d(Eigen::Index side);

}  // namespace blocksplit
