// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#include "blocksplit/block_vector.hpp"

#include <cmath>
#include <numeric>

#include "blocksplit/errors.hpp"

namespace blocksplit {

BlockVector::BlockVector(std::vector<Eigen::Index> dims) : dims_(std::move(dims)) {
  blocks_.reserve(dims_.size());
  for (Eigen::Index d : dims_) {
    detail::require(d >= 0, "BlockVector: negative block dimension");
    blocks_.emplace_back(Eigen::VectorXd::Zero(d));
  }
}

BlockVector BlockVector::from_blocks(std::vector<Eigen::VectorXd> blocks) {
  BlockVector v;
  v.dims_.reserve(blocks.size());
  for (const auto& b : blocks) v.dims_.push_back(b.size());
  v.blocks_ = std::move(blocks);
  return v;
}

Eigen::Index BlockVector::total_dim() const {
  return std::accumulate(dims_.begin(), dims_.end(), Eigen::Index{0});
}

void BlockVector::set_zero() {
  for (auto& b : blocks_) b.setZero();
}

double BlockVector::squared_norm() const {
  double s = 0.0;
  for (const auto& b : blocks_) s += b.squaredNorm();
  return s;
}

double BlockVector::norm() const { return std::sqrt(squared_norm()); }

double BlockVector::dot(const BlockVector& other) const {
  detail::require(same_shape(other), "BlockVector::dot: shape mismatch");
  double s = 0.0;
  for (std::size_t i = 0; i < blocks_.size(); ++i) s += blocks_[i].dot(other.blocks_[i]);
  return s;
}

BlockVector& BlockVector::operator+=(const BlockVector& other) {
  detail::require(same_shape(other), "BlockVector::operator+=: shape mismatch");
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] += other.blocks_[i];
  return *this;
}

BlockVector& BlockVector::operator-=(const BlockVector& other) {
  detail::require(same_shape(other), "BlockVector::operator-=: shape mismatch");
  for (std::size_t i = 0; i < blocks_.size(); ++i) blocks_[i] -= other.blocks_[i];
  return *this;
}

BlockVector& BlockVector::operator*=(double s) {
  for (auto& b : blocks_) b *= s;
  return *this;
}

Eigen::VectorXd BlockVector::to_flat() const {
  Eigen::VectorXd flat(total_dim());
  Eigen::Index off = 0;
  for (const auto& b : blocks_) {
    flat.segment(off, b.size()) = b;
    off += b.size();
  }
  return flat;
}

void BlockVector::assign_from_flat(const Eigen::Ref<const Eigen::VectorXd>& flat) {
  detail::require(flat.size() == total_dim(), "BlockVector::assign_from_flat: size mismatch");
  Eigen::Index off = 0;
  for (auto& b : blocks_) {
    b = flat.segment(off, b.size());
    off += b.size();
  }
}

bool BlockVector::operator==(const BlockVector& other) const {
  if (!same_shape(other)) return false;
  for (std::size_t i = 0; i < blocks_.size(); ++i)
    if (blocks_[i] != other.blocks_[i]) return false;
  return true;
}

}  // namespace blocksplit
