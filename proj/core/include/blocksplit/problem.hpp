// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#pragma once

#include <memory>
#include <vector>

#include "blocksplit/block_vector.hpp"
#include "blocksplit/operator_grid.hpp"
#include "blocksplit/prox.hpp"

namespace blocksplit {

/// A full problem instance: minimize sum_i f_i(x_i) + sum_k g_k(sum_i L_{k,i} x_i)
/// over x in H_1 x ... x H_m, with proper lsc convex f_i, g_k and linear L_{k,i}.
///
/// Immutable after construction and shareable across threads.
class ProblemSpec {
 public:
  ProblemSpec(std::vector<ProxFunction> f, std::vector<ProxFunction> g,
              BlockOperatorGrid grid);

  Eigen::Index m() const { return grid_.m(); }
  Eigen::Index p() const { return grid_.p(); }
  const ProxFunction& f(Eigen::Index i) const { return f_[static_cast<std::size_t>(i)]; }
  const ProxFunction& g(Eigen::Index k) const { return g_[static_cast<std::size_t>(k)]; }
  const BlockOperatorGrid& grid() const { return grid_; }
  const std::vector<Eigen::Index>& h_dims() const { return grid_.h_dims(); }
  const std::vector<Eigen::Index>& g_dims() const { return grid_.g_dims(); }

  BlockVector zero_h() const { return grid_.zero_h(); }
  BlockVector zero_g() const { return grid_.zero_g(); }

 private:
  std::vector<ProxFunction> f_;
  std::vector<ProxFunction> g_;
  BlockOperatorGrid grid_;
};

using ProblemSpecPtr = std::shared_ptr<const ProblemSpec>;

/// A primal-dual pair (x, v*) in H x G.
struct KTPoint {
  BlockVector x;
  BlockVector v_star;
};

/// Extended-real objective sum_i f_i(x_i) + sum_k g_k(sum_i L_{k,i} x_i);
/// +inf as soon as any term is +inf.
double objective_value(const ProblemSpec& spec, const BlockVector& x);

/// Proximal optimality residual of the pair (x, v*):
///   sum_i || x_i - prox_{gamma f_i}(x_i - gamma sum_k L*_{k,i} v*_k) ||
/// + sum_k || v*_k - prox_{mu g_k*}(v*_k + mu sum_i L_{k,i} x_i) ||,
/// with the conjugate prox obtained through the Moreau identity. Zero exactly
/// at the points satisfying both optimality inclusions; any positive gamma,
/// mu certify the same set.
double kt_residual(const ProblemSpec& spec, const KTPoint& pt, double gamma = 1.0,
                   double mu = 1.0);

}  // namespace blocksplit
