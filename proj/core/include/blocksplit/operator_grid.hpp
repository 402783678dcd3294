// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "blocksplit/block_vector.hpp"
#include "blocksplit/linop.hpp"

namespace blocksplit {

/// Running multiply-accumulate tally for linear-operator work.
struct MacCounter {
  std::uint64_t macs = 0;
  void add(std::uint64_t n) { macs += n; }
};

/// The p x m grid of linear maps L_{k,i}: H_i -> G_k with structural zeros.
///
/// Row index k ranges over the coupling (dual) spaces G_k, column index i
/// over the primal spaces H_i. Absent entries are structural zeros. The grid
/// induces the stacked operator mapping x to (sum_i L_{1,i} x_i, ...,
/// sum_i L_{p,i} x_i).
class BlockOperatorGrid {
 public:
  BlockOperatorGrid(std::vector<Eigen::Index> h_dims, std::vector<Eigen::Index> g_dims);

  /// Installs L_{k,i}; dimensions must match the declared block dims.
  void set(Eigen::Index k, Eigen::Index i, LinOpPtr op);

  /// Entry (k, i), or nullptr for a structural zero.
  const LinOp* get(Eigen::Index k, Eigen::Index i) const;

  Eigen::Index m() const { return static_cast<Eigen::Index>(h_dims_.size()); }
  Eigen::Index p() const { return static_cast<Eigen::Index>(g_dims_.size()); }
  const std::vector<Eigen::Index>& h_dims() const { return h_dims_; }
  const std::vector<Eigen::Index>& g_dims() const { return g_dims_; }
  /// N = dim of the primal product space.
  Eigen::Index dim_h() const;
  /// M = dim of the dual product space.
  Eigen::Index dim_g() const;
  std::size_t entry_count() const { return entries_.size(); }

  /// Stacked apply: k-th output block is sum_i L_{k,i} x_i.
  BlockVector apply(const BlockVector& x, MacCounter* macs = nullptr) const;
  /// Stacked adjoint: i-th output block is sum_k L*_{k,i} v_k.
  BlockVector apply_adjoint(const BlockVector& v, MacCounter* macs = nullptr) const;

  /// Single output row: sum_i L_{k,i} x_i.
  Eigen::VectorXd apply_row(Eigen::Index k, const BlockVector& x,
                            MacCounter* macs = nullptr) const;
  /// Single adjoint column: sum_k L*_{k,i} v_k.
  Eigen::VectorXd apply_adjoint_col(Eigen::Index i, const BlockVector& v,
                                    MacCounter* macs = nullptr) const;

  /// Dense materialization of the stacked operator (dim_g x dim_h).
  Eigen::MatrixXd stacked_dense() const;

  /// MAC estimate of one full stacked apply.
  std::uint64_t full_apply_macs() const;

  BlockVector zero_h() const { return BlockVector(h_dims_); }
  BlockVector zero_g() const { return BlockVector(g_dims_); }

 private:
  std::vector<Eigen::Index> h_dims_;
  std::vector<Eigen::Index> g_dims_;
  std::map<std::pair<Eigen::Index, Eigen::Index>, LinOpPtr> entries_;
  // Entries grouped by row k and by column i for selective application.
  std::vector<std::vector<std::pair<Eigen::Index, const LinOp*>>> rows_;
  std::vector<std::vector<std::pair<Eigen::Index, const LinOp*>>> cols_;
};

}  // namespace blocksplit
