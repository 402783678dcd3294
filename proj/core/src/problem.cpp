// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#include "blocksplit/problem.hpp"

#include <cmath>

#include "blocksplit/errors.hpp"

namespace blocksplit {

ProblemSpec::ProblemSpec(std::vector<ProxFunction> f, std::vector<ProxFunction> g,
                         BlockOperatorGrid grid)
    : f_(std::move(f)), g_(std::move(g)), grid_(std::move(grid)) {
  detail::require(static_cast<Eigen::Index>(f_.size()) == grid_.m(),
                  "ProblemSpec: need one f_i per primal block");
  detail::require(static_cast<Eigen::Index>(g_.size()) == grid_.p(),
                  "ProblemSpec: need one g_k per coupling block");
  for (Eigen::Index i = 0; i < grid_.m(); ++i) {
    detail::require(f_[static_cast<std::size_t>(i)].dim == grid_.h_dims()[static_cast<std::size_t>(i)],
                    "ProblemSpec: f_i domain dimension does not match H_i");
    detail::require(static_cast<bool>(f_[static_cast<std::size_t>(i)].prox),
                    "ProblemSpec: f_i has no prox");
  }
  for (Eigen::Index k = 0; k < grid_.p(); ++k) {
    detail::require(g_[static_cast<std::size_t>(k)].dim == grid_.g_dims()[static_cast<std::size_t>(k)],
                    "ProblemSpec: g_k domain dimension does not match G_k");
    detail::require(static_cast<bool>(g_[static_cast<std::size_t>(k)].prox),
                    "ProblemSpec: g_k has no prox");
  }
}

double objective_value(const ProblemSpec& spec, const BlockVector& x) {
  detail::require(x.dims() == spec.h_dims(), "objective_value: dimension mismatch");
  double total = 0.0;
  for (Eigen::Index i = 0; i < spec.m(); ++i) {
    const double v = spec.f(i).eval(x.block(i));
    if (v == kPlusInfinity) return kPlusInfinity;
    total += v;
  }
  if (spec.p() > 0) {
    const BlockVector lx = spec.grid().apply(x);
    for (Eigen::Index k = 0; k < spec.p(); ++k) {
      const double v = spec.g(k).eval(lx.block(k));
      if (v == kPlusInfinity) return kPlusInfinity;
      total += v;
    }
  }
  return total;
}

double kt_residual(const ProblemSpec& spec, const KTPoint& pt, double gamma, double mu) {
  detail::require(gamma > 0.0 && mu > 0.0, "kt_residual: gamma and mu must be positive");
  detail::require(pt.x.dims() == spec.h_dims(), "kt_residual: x dimension mismatch");
  detail::require(pt.v_star.dims() == spec.g_dims(), "kt_residual: v* dimension mismatch");

  double res = 0.0;
  const BlockVector lt_v = spec.grid().apply_adjoint(pt.v_star);
  for (Eigen::Index i = 0; i < spec.m(); ++i) {
    const Eigen::VectorXd arg = pt.x.block(i) - gamma * lt_v.block(i);
    res += (pt.x.block(i) - spec.f(i).prox(arg, gamma)).norm();
  }
  if (spec.p() > 0) {
    const BlockVector lx = spec.grid().apply(pt.x);
    for (Eigen::Index k = 0; k < spec.p(); ++k) {
      const Eigen::VectorXd arg = pt.v_star.block(k) + mu * lx.block(k);
      res += (pt.v_star.block(k) - prox_conjugate_moreau(spec.g(k), arg, mu)).norm();
    }
  }
  return res;
}

}  // namespace blocksplit
