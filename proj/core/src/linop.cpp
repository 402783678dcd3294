// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#include "blocksplit/linop.hpp"

#include <utility>

#include "blocksplit/errors.hpp"

namespace blocksplit {

LinOp::LinOp(Eigen::Index out_dim, Eigen::Index in_dim) : out_(out_dim), in_(in_dim) {
  detail::require(out_dim >= 1 && in_dim >= 1, "LinOp: dimensions must be >= 1");
}

Eigen::VectorXd LinOp::apply(const Eigen::Ref<const Eigen::VectorXd>& x) const {
  Eigen::VectorXd y(rows());
  apply(x, y);
  return y;
}

Eigen::VectorXd LinOp::apply_adjoint(const Eigen::Ref<const Eigen::VectorXd>& v) const {
  Eigen::VectorXd w(cols());
  apply_adjoint(v, w);
  return w;
}

Eigen::MatrixXd LinOp::to_dense() const {
  Eigen::MatrixXd a(rows(), cols());
  Eigen::VectorXd e = Eigen::VectorXd::Zero(cols());
  Eigen::VectorXd col(rows());
  for (Eigen::Index j = 0; j < cols(); ++j) {
    e[j] = 1.0;
    apply(e, col);
    a.col(j) = col;
    e[j] = 0.0;
  }
  return a;
}

namespace {

class DenseOp final : public LinOp {
 public:
  explicit DenseOp(Eigen::MatrixXd a) : LinOp(a.rows(), a.cols()), a_(std::move(a)) {}

  LinOpKind kind() const override { return LinOpKind::dense; }

  void apply(const Eigen::Ref<const Eigen::VectorXd>& x,
             Eigen::Ref<Eigen::VectorXd> y) const override {
    y.noalias() = a_ * x;
  }

  void apply_adjoint(const Eigen::Ref<const Eigen::VectorXd>& v,
                     Eigen::Ref<Eigen::VectorXd> w) const override {
    w.noalias() = a_.transpose() * v;
  }

  Eigen::MatrixXd to_dense() const override { return a_; }

 private:
  Eigen::MatrixXd a_;
};

class RowFunctionalOp final : public LinOp {
 public:
  explicit RowFunctionalOp(Eigen::VectorXd u) : LinOp(1, u.size()), u_(std::move(u)) {}

  LinOpKind kind() const override { return LinOpKind::row_functional; }

  void apply(const Eigen::Ref<const Eigen::VectorXd>& x,
             Eigen::Ref<Eigen::VectorXd> y) const override {
    y[0] = u_.dot(x);
  }

  void apply_adjoint(const Eigen::Ref<const Eigen::VectorXd>& v,
                     Eigen::Ref<Eigen::VectorXd> w) const override {
    w = v[0] * u_;
  }

  Eigen::MatrixXd to_dense() const override { return u_.transpose(); }

  std::uint64_t mac_cost() const override { return static_cast<std::uint64_t>(cols()); }

 private:
  Eigen::VectorXd u_;
};

class RowSelectorOp final : public LinOp {
 public:
  RowSelectorOp(Eigen::Index in_dim, std::vector<Eigen::Index> indices)
      : LinOp(static_cast<Eigen::Index>(indices.size()), in_dim), idx_(std::move(indices)) {
    for (Eigen::Index i : idx_) {
      detail::require(i >= 0 && i < in_dim, "row_selector_op: index out of range");
    }
  }

  LinOpKind kind() const override { return LinOpKind::structured; }

  void apply(const Eigen::Ref<const Eigen::VectorXd>& x,
             Eigen::Ref<Eigen::VectorXd> y) const override {
    for (std::size_t r = 0; r < idx_.size(); ++r) y[static_cast<Eigen::Index>(r)] = x[idx_[r]];
  }

  void apply_adjoint(const Eigen::Ref<const Eigen::VectorXd>& v,
                     Eigen::Ref<Eigen::VectorXd> w) const override {
    w.setZero();
    for (std::size_t r = 0; r < idx_.size(); ++r) w[idx_[r]] = v[static_cast<Eigen::Index>(r)];
  }

  Eigen::MatrixXd to_dense() const override {
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(rows(), cols());
    for (std::size_t r = 0; r < idx_.size(); ++r) a(static_cast<Eigen::Index>(r), idx_[r]) = 1.0;
    return a;
  }

  std::uint64_t mac_cost() const override { return static_cast<std::uint64_t>(rows()); }

 private:
  std::vector<Eigen::Index> idx_;
};

class ScaledIdentityOp final : public LinOp {
 public:
  ScaledIdentityOp(Eigen::Index dim, double scale) : LinOp(dim, dim), scale_(scale) {}

  LinOpKind kind() const override { return LinOpKind::structured; }

  void apply(const Eigen::Ref<const Eigen::VectorXd>& x,
             Eigen::Ref<Eigen::VectorXd> y) const override {
    y = scale_ * x;
  }

  void apply_adjoint(const Eigen::Ref<const Eigen::VectorXd>& v,
                     Eigen::Ref<Eigen::VectorXd> w) const override {
    w = scale_ * v;
  }

  Eigen::MatrixXd to_dense() const override {
    return scale_ * Eigen::MatrixXd::Identity(rows(), cols());
  }

  std::uint64_t mac_cost() const override { return static_cast<std::uint64_t>(rows()); }

 private:
  double scale_;
};

class ForwardDifference2D final : public LinOp {
 public:
  explicit ForwardDifference2D(Eigen::Index side)
      : LinOp(2 * side * side, side * side), side_(side) {
    detail::require(side >= 2, "forward_difference_2d: side must be >= 2");
  }

  LinOpKind kind() const override { return LinOpKind::structured; }

  void apply(const Eigen::Ref<const Eigen::VectorXd>& x,
             Eigen::Ref<Eigen::VectorXd> y) const override {
    const Eigen::Index n = side_ * side_;
    for (Eigen::Index r = 0; r < side_; ++r) {
      for (Eigen::Index c = 0; c < side_; ++c) {
        const Eigen::Index j = r * side_ + c;
        y[j] = (c + 1 < side_) ? x[j + 1] - x[j] : 0.0;
        y[n + j] = (r + 1 < side_) ? x[j + side_] - x[j] : 0.0;
      }
    }
  }

  void apply_adjoint(const Eigen::Ref<const Eigen::VectorXd>& v,
                     Eigen::Ref<Eigen::VectorXd> w) const override {
    const Eigen::Index n = side_ * side_;
    w.setZero();
    for (Eigen::Index r = 0; r < side_; ++r) {
      for (Eigen::Index c = 0; c < side_; ++c) {
        const Eigen::Index j = r * side_ + c;
        if (c + 1 < side_) {
          w[j + 1] += v[j];
          w[j] -= v[j];
        }
        if (r + 1 < side_) {
          w[j + side_] += v[n + j];
          w[j] -= v[n + j];
        }
      }
    }
  }

  std::uint64_t mac_cost() const override {
    return static_cast<std::uint64_t>(4 * side_ * side_);
  }

 private:
  Eigen::Index side_;
};

}  // namespace

LinOpPtr dense_op(Eigen::MatrixXd a) { return std::make_shared<DenseOp>(std::move(a)); }

LinOpPtr row_functional_op(Eigen::VectorXd u) {
  return std::make_shared<RowFunctionalOp>(std::move(u));
}

LinOpPtr row_selector_op(Eigen::Index in_dim, std::vector<Eigen::Index> indices) {
  return std::make_shared<RowSelectorOp>(in_dim, std::move(indices));
}

LinOpPtr scaled_identity_op(Eigen::Index dim, double scale) {
  return std::make_shared<ScaledIdentityOp>(dim, scale);
}

LinOpPtr forward_difference_2d(Eigen::Index side) {
  return std::make_shared<ForwardDifference2D>(side);
}

}  // namespace blocksplit
