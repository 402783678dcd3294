// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#include "blocksplit/projector.hpp"

#include "blocksplit/errors.hpp"

namespace blocksplit {

SubspaceProjector::SubspaceProjector(const BlockOperatorGrid& grid, GramSide side)
    : h_dims_(grid.h_dims()), g_dims_(grid.g_dims()) {
  n_ = grid.dim_h();
  m_ = grid.dim_g();
  stacked_ = grid.stacked_dense();

  if (side == GramSide::automatic) {
    side = (m_ <= n_) ? GramSide::dual : GramSide::primal;
  }
  side_ = side;

  const auto u64 = [](Eigen::Index v) { return static_cast<std::uint64_t>(v); };
  const Eigen::Index small_dim = (side_ == GramSide::dual) ? m_ : n_;

  Eigen::MatrixXd gram;
  if (side_ == GramSide::dual) {
    gram = Eigen::MatrixXd::Identity(m_, m_);
    gram.noalias() += stacked_ * stacked_.transpose();
  } else {
    gram = Eigen::MatrixXd::Identity(n_, n_);
    gram.noalias() += stacked_.transpose() * stacked_;
  }
  llt_.compute(gram);
  if (llt_.info() != Eigen::Success) {
    throw numerical_error("SubspaceProjector: Cholesky factorization of Id + Gram failed");
  }

  // Setup: materialize L, form the Gram product, factorize.
  setup_macs_ = u64(m_) * u64(n_)                          // materialization probes
                + u64(small_dim) * u64(small_dim) * u64((side_ == GramSide::dual) ? n_ : m_)
                + u64(small_dim) * u64(small_dim) * u64(small_dim) / 3;
  // Apply: two dense passes through L plus the triangular solve pair.
  apply_macs_ = 2 * u64(m_) * u64(n_) + u64(small_dim) * u64(small_dim);
}

std::pair<BlockVector, BlockVector> SubspaceProjector::project(const BlockVector& z,
                                                               const BlockVector& y,
                                                               MacCounter* macs) const {
  detail::require(z.dims() == h_dims_, "SubspaceProjector::project: z dimension mismatch");
  detail::require(y.dims() == g_dims_, "SubspaceProjector::project: y dimension mismatch");

  const Eigen::VectorXd zf = z.to_flat();
  const Eigen::VectorXd yf = y.to_flat();
  Eigen::VectorXd tf(n_);
  Eigen::VectorXd uf(m_);

  if (side_ == GramSide::dual) {
    Eigen::VectorXd rhs = stacked_ * zf - yf;
    const Eigen::VectorXd s = llt_.solve(rhs);
    tf = zf - stacked_.transpose() * s;
    uf = yf + s;
  } else {
    Eigen::VectorXd rhs = zf + stacked_.transpose() * yf;
    tf = llt_.solve(rhs);
    uf = stacked_ * tf;
  }
  if (macs) macs->add(apply_macs_);

  BlockVector t(h_dims_);
  BlockVector u(g_dims_);
  t.assign_from_flat(tf);
  u.assign_from_flat(uf);
  return {std::move(t), std::move(u)};
}

Eigen::VectorXd SubspaceProjector::coordinate(Eigen::Index j, const BlockVector& z,
                                              const BlockVector& y, MacCounter* macs) const {
  const Eigen::Index mm = static_cast<Eigen::Index>(h_dims_.size());
  const Eigen::Index pp = static_cast<Eigen::Index>(g_dims_.size());
  detail::require(j >= 0 && j < mm + pp, "SubspaceProjector::coordinate: index out of range");
  auto [t, u] = project(z, y, macs);
  return (j < mm) ? t.block(j) : u.block(j - mm);
}

}  // namespace blocksplit
