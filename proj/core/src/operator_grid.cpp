// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#include "blocksplit/operator_grid.hpp"

#include <numeric>

#include "blocksplit/errors.hpp"

namespace blocksplit {

BlockOperatorGrid::BlockOperatorGrid(std::vector<Eigen::Index> h_dims,
                                     std::vector<Eigen::Index> g_dims)
    : h_dims_(std::move(h_dims)), g_dims_(std::move(g_dims)) {
  detail::require(!h_dims_.empty(), "BlockOperatorGrid: m must be >= 1");
  for (Eigen::Index d : h_dims_) detail::require(d >= 1, "BlockOperatorGrid: bad H dim");
  for (Eigen::Index d : g_dims_) detail::require(d >= 1, "BlockOperatorGrid: bad G dim");
  rows_.resize(g_dims_.size());
  cols_.resize(h_dims_.size());
}

void BlockOperatorGrid::set(Eigen::Index k, Eigen::Index i, LinOpPtr op) {
  detail::require(k >= 0 && k < p(), "BlockOperatorGrid::set: row index out of range");
  detail::require(i >= 0 && i < m(), "BlockOperatorGrid::set: column index out of range");
  detail::require(op != nullptr, "BlockOperatorGrid::set: null operator");
  detail::require(op->rows() == g_dims_[static_cast<std::size_t>(k)],
                  "BlockOperatorGrid::set: operator codomain does not match G_k");
  detail::require(op->cols() == h_dims_[static_cast<std::size_t>(i)],
                  "BlockOperatorGrid::set: operator domain does not match H_i");
  detail::require(entries_.find({k, i}) == entries_.end(),
                  "BlockOperatorGrid::set: entry already set");
  const LinOp* raw = op.get();
  entries_.emplace(std::make_pair(k, i), std::move(op));
  rows_[static_cast<std::size_t>(k)].emplace_back(i, raw);
  cols_[static_cast<std::size_t>(i)].emplace_back(k, raw);
}

const LinOp* BlockOperatorGrid::get(Eigen::Index k, Eigen::Index i) const {
  auto it = entries_.find({k, i});
  return it == entries_.end() ? nullptr : it->second.get();
}

Eigen::Index BlockOperatorGrid::dim_h() const {
  return std::accumulate(h_dims_.begin(), h_dims_.end(), Eigen::Index{0});
}

Eigen::Index BlockOperatorGrid::dim_g() const {
  return std::accumulate(g_dims_.begin(), g_dims_.end(), Eigen::Index{0});
}

BlockVector BlockOperatorGrid::apply(const BlockVector& x, MacCounter* macs) const {
  detail::require(x.dims() == h_dims_, "BlockOperatorGrid::apply: dimension mismatch");
  BlockVector out(g_dims_);
  for (Eigen::Index k = 0; k < p(); ++k) {
    Eigen::VectorXd& yk = out.block(k);
    Eigen::VectorXd tmp(yk.size());
    for (const auto& [i, op] : rows_[static_cast<std::size_t>(k)]) {
      op->apply(x.block(i), tmp);
      yk += tmp;
      if (macs) macs->add(op->mac_cost());
    }
  }
  return out;
}

BlockVector BlockOperatorGrid::apply_adjoint(const BlockVector& v, MacCounter* macs) const {
  detail::require(v.dims() == g_dims_, "BlockOperatorGrid::apply_adjoint: dimension mismatch");
  BlockVector out(h_dims_);
  for (Eigen::Index i = 0; i < m(); ++i) {
    Eigen::VectorXd& wi = out.block(i);
    Eigen::VectorXd tmp(wi.size());
    for (const auto& [k, op] : cols_[static_cast<std::size_t>(i)]) {
      op->apply_adjoint(v.block(k), tmp);
      wi += tmp;
      if (macs) macs->add(op->mac_cost());
    }
  }
  return out;
}

Eigen::VectorXd BlockOperatorGrid::apply_row(Eigen::Index k, const BlockVector& x,
                                             MacCounter* macs) const {
  detail::require(k >= 0 && k < p(), "BlockOperatorGrid::apply_row: row out of range");
  detail::require(x.dims() == h_dims_, "BlockOperatorGrid::apply_row: dimension mismatch");
  Eigen::VectorXd y = Eigen::VectorXd::Zero(g_dims_[static_cast<std::size_t>(k)]);
  Eigen::VectorXd tmp(y.size());
  for (const auto& [i, op] : rows_[static_cast<std::size_t>(k)]) {
    op->apply(x.block(i), tmp);
    y += tmp;
    if (macs) macs->add(op->mac_cost());
  }
  return y;
}

Eigen::VectorXd BlockOperatorGrid::apply_adjoint_col(Eigen::Index i, const BlockVector& v,
                                                     MacCounter* macs) const {
  detail::require(i >= 0 && i < m(), "BlockOperatorGrid::apply_adjoint_col: column out of range");
  detail::require(v.dims() == g_dims_,
                  "BlockOperatorGrid::apply_adjoint_col: dimension mismatch");
  Eigen::VectorXd w = Eigen::VectorXd::Zero(h_dims_[static_cast<std::size_t>(i)]);
  Eigen::VectorXd tmp(w.size());
  for (const auto& [k, op] : cols_[static_cast<std::size_t>(i)]) {
    op->apply_adjoint(v.block(k), tmp);
    w += tmp;
    if (macs) macs->add(op->mac_cost());
  }
  return w;
}

Eigen::MatrixXd BlockOperatorGrid::stacked_dense() const {
  Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim_g(), dim_h());
  std::vector<Eigen::Index> row_off(g_dims_.size() + 1, 0);
  std::vector<Eigen::Index> col_off(h_dims_.size() + 1, 0);
  for (std::size_t k = 0; k < g_dims_.size(); ++k) row_off[k + 1] = row_off[k] + g_dims_[k];
  for (std::size_t i = 0; i < h_dims_.size(); ++i) col_off[i + 1] = col_off[i] + h_dims_[i];
  for (const auto& [ki, op] : entries_) {
    const auto [k, i] = ki;
    a.block(row_off[static_cast<std::size_t>(k)], col_off[static_cast<std::size_t>(i)],
            g_dims_[static_cast<std::size_t>(k)], h_dims_[static_cast<std::size_t>(i)]) =
        op->to_dense();
  }
  return a;
}

std::uint64_t BlockOperatorGrid::full_apply_macs() const {
  std::uint64_t total = 0;
  for (const auto& [ki, op] : entries_) total += op->mac_cost();
  return total;
}

}  // namespace blocksplit
