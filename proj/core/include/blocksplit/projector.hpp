// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <cstdint>
#include <utility>

#include "blocksplit/block_vector.hpp"
#include "blocksplit/operator_grid.hpp"

namespace blocksplit {

/// Which Gram matrix backs the projector factorization.
///
/// `primal` factors Id + L*L (N x N), `dual` factors Id + LL* (M x M),
/// `automatic` picks the smaller side.
enum class GramSide { automatic, primal, dual };

/// Orthogonal projector onto the graph subspace V = {(z, y) : y = L z} of
/// the product space H x G, where L is the stacked operator of a grid.
///
/// Built once from a dense materialization of L and a Cholesky factorization
/// of the chosen Gram matrix; projections are then two dense matrix-vector
/// products plus one triangular solve pair. With the dual factorization the
/// projection is (z - L* s, y + s) with s = (Id + LL*)^{-1}(L z - y); with
/// the primal factorization it is (t, L t) with t = (Id + L*L)^{-1}(z + L* y).
/// Both closed forms agree.
class SubspaceProjector {
 public:
  explicit SubspaceProjector(const BlockOperatorGrid& grid,
                             GramSide side = GramSide::automatic);

  /// Projects (z, y) onto V; returns (t, L t).
  std::pair<BlockVector, BlockVector> project(const BlockVector& z, const BlockVector& y,
                                              MacCounter* macs = nullptr) const;

  /// Coordinate operator Q_j, j in [0, m+p): block j of the projection
  /// (blocks [0, m) from t, blocks [m, m+p) from L t). The projection is
  /// computed in full and the requested block returned.
  Eigen::VectorXd coordinate(Eigen::Index j, const BlockVector& z, const BlockVector& y,
                             MacCounter* macs = nullptr) const;

  GramSide factored_side() const { return side_; }
  Eigen::Index dim_h() const { return n_; }
  Eigen::Index dim_g() const { return m_; }

  /// One-time setup cost (materialization + Gram + factorization), in MACs.
  std::uint64_t setup_macs() const { return setup_macs_; }
  /// Cost of one projection, in MACs.
  std::uint64_t apply_macs() const { return apply_macs_; }

 private:
  Eigen::MatrixXd stacked_;  // M x N
  Eigen::LLT<Eigen::MatrixXd> llt_;
  GramSide side_;
  Eigen::Index n_ = 0;  // dim H
  Eigen::Index m_ = 0;  // dim G
  std::vector<Eigen::Index> h_dims_;
  std::vector<Eigen::Index> g_dims_;
  std::uint64_t setup_macs_ = 0;
  std::uint64_t apply_macs_ = 0;
};

}  // namespace blocksplit
