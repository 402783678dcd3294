// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#include "blocksplit/prox.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <utility>

#include "blocksplit/errors.hpp"

namespace blocksplit {

namespace {

void check_dim(const Eigen::VectorXd& x, Eigen::Index dim, const char* who) {
  detail::require(x.size() == dim, std::string(who) + ": input dimension mismatch");
}

void check_gamma(double gamma, const char* who) {
  detail::require(gamma > 0.0 && std::isfinite(gamma),
                  std::string(who) + ": gamma must be positive");
}

}  // namespace

ProxFunction prox_zero(Eigen::Index dim) {
  detail::require(dim >= 1, "prox_zero: dim must be >= 1");
  ProxFunction f;
  f.dim = dim;
  f.eval = [dim](const Eigen::VectorXd& x) {
    check_dim(x, dim, "prox_zero");
    return 0.0;
  };
  f.prox = [dim](const Eigen::VectorXd& x, double gamma) {
    check_dim(x, dim, "prox_zero");
    check_gamma(gamma, "prox_zero");
    return x;
  };
  return f;
}

ProxFunction prox_scaled_l2_norm(double tau, Eigen::Index dim) {
  detail::require(tau > 0.0, "prox_scaled_l2_norm: tau must be positive");
  detail::require(dim >= 1, "prox_scaled_l2_norm: dim must be >= 1");
  ProxFunction f;
  f.dim = dim;
  f.eval = [tau, dim](const Eigen::VectorXd& x) {
    check_dim(x, dim, "prox_scaled_l2_norm");
    return tau * x.norm();
  };
  f.prox = [tau, dim](const Eigen::VectorXd& x, double gamma) -> Eigen::VectorXd {
    check_dim(x, dim, "prox_scaled_l2_norm");
    check_gamma(gamma, "prox_scaled_l2_norm");
    const double r = x.norm();
    if (r <= gamma * tau) return Eigen::VectorXd::Zero(dim);
    return (1.0 - gamma * tau / r) * x;
  };
  return f;
}

ProxFunction prox_hinge(double beta) {
  detail::require(beta != 0.0, "prox_hinge: beta must be nonzero");
  ProxFunction f;
  f.dim = 1;
  f.eval = [beta](const Eigen::VectorXd& x) {
    check_dim(x, 1, "prox_hinge");
    return std::max(0.0, 1.0 - beta * x[0]);
  };
  // For h: s -> max{0, 1 - s}, prox_{g h}(w) is w + g below 1 - g, clamped
  // to 1 on [1 - g, 1], and w above 1. General beta via g(xi) = h(beta xi):
  // prox_{g}(x) = beta^{-1} prox_{gamma beta^2 h}(beta x).
  f.prox = [beta](const Eigen::VectorXd& x, double gamma) -> Eigen::VectorXd {
    check_dim(x, 1, "prox_hinge");
    check_gamma(gamma, "prox_hinge");
    const double gp = gamma * beta * beta;
    const double w = beta * x[0];
    double v;
    if (w < 1.0 - gp) {
      v = w + gp;
    } else if (w <= 1.0) {
      v = 1.0;
    } else {
      v = w;
    }
    Eigen::VectorXd out(1);
    out[0] = v / beta;
    return out;
  };
  return f;
}

ProxFunction prox_box_indicator(double lo, double hi, Eigen::Index dim) {
  detail::require(lo < hi, "prox_box_indicator: requires lo < hi");
  detail::require(dim >= 1, "prox_box_indicator: dim must be >= 1");
  ProxFunction f;
  f.dim = dim;
  f.eval = [lo, hi, dim](const Eigen::VectorXd& x) {
    check_dim(x, dim, "prox_box_indicator");
    if ((x.array() < lo).any() || (x.array() > hi).any()) return kPlusInfinity;
    return 0.0;
  };
  f.prox = [lo, hi, dim](const Eigen::VectorXd& x, double gamma) -> Eigen::VectorXd {
    check_dim(x, dim, "prox_box_indicator");
    check_gamma(gamma, "prox_box_indicator");
    return x.array().max(lo).min(hi);
  };
  return f;
}

ProxFunction prox_scaled_l2_distance(double alpha, Eigen::VectorXd b) {
  detail::require(alpha > 0.0, "prox_scaled_l2_distance: alpha must be positive");
  detail::require(b.size() >= 1, "prox_scaled_l2_distance: empty center");
  const Eigen::Index dim = b.size();
  ProxFunction f;
  f.dim = dim;
  auto center = std::make_shared<const Eigen::VectorXd>(std::move(b));
  f.eval = [alpha, center, dim](const Eigen::VectorXd& x) {
    check_dim(x, dim, "prox_scaled_l2_distance");
    return alpha * (x - *center).norm();
  };
  f.prox = [alpha, center, dim](const Eigen::VectorXd& x, double gamma) -> Eigen::VectorXd {
    check_dim(x, dim, "prox_scaled_l2_distance");
    check_gamma(gamma, "prox_scaled_l2_distance");
    const Eigen::VectorXd diff = x - *center;
    const double r = diff.norm();
    if (r <= alpha * gamma) return *center;
    return x - (alpha * gamma / r) * diff;
  };
  return f;
}

ProxFunction prox_scaled_sq_l2(double alpha, Eigen::VectorXd c) {
  detail::require(alpha > 0.0, "prox_scaled_sq_l2: alpha must be positive");
  detail::require(c.size() >= 1, "prox_scaled_sq_l2: empty center");
  const Eigen::Index dim = c.size();
  ProxFunction f;
  f.dim = dim;
  auto center = std::make_shared<const Eigen::VectorXd>(std::move(c));
  f.eval = [alpha, center, dim](const Eigen::VectorXd& x) {
    check_dim(x, dim, "prox_scaled_sq_l2");
    return alpha * (x - *center).squaredNorm();
  };
  f.prox = [alpha, center, dim](const Eigen::VectorXd& x, double gamma) -> Eigen::VectorXd {
    check_dim(x, dim, "prox_scaled_sq_l2");
    check_gamma(gamma, "prox_scaled_sq_l2");
    const double t = 2.0 * alpha * gamma;
    return (x + t * (*center)) / (1.0 + t);
  };
  return f;
}

ProxFunction prox_l12_pairs(Eigen::Index pair_count) {
  detail::require(pair_count >= 1, "prox_l12_pairs: pair_count must be >= 1");
  const Eigen::Index dim = 2 * pair_count;
  ProxFunction f;
  f.dim = dim;
  f.eval = [pair_count, dim](const Eigen::VectorXd& y) {
    check_dim(y, dim, "prox_l12_pairs");
    double s = 0.0;
    for (Eigen::Index j = 0; j < pair_count; ++j) {
      s += std::hypot(y[j], y[pair_count + j]);
    }
    return s;
  };
  f.prox = [pair_count, dim](const Eigen::VectorXd& y, double gamma) -> Eigen::VectorXd {
    check_dim(y, dim, "prox_l12_pairs");
    check_gamma(gamma, "prox_l12_pairs");
    Eigen::VectorXd out = Eigen::VectorXd::Zero(dim);
    for (Eigen::Index j = 0; j < pair_count; ++j) {
      const double a = y[j];
      const double b = y[pair_count + j];
      const double r = std::hypot(a, b);
      if (r > gamma) {
        const double shrink = 1.0 - gamma / r;
        out[j] = shrink * a;
        out[pair_count + j] = shrink * b;
      }
    }
    return out;
  };
  return f;
}

Eigen::VectorXd prox_conjugate_moreau(const ProxFunction& f, const Eigen::VectorXd& x,
                                      double gamma) {
  check_gamma(gamma, "prox_conjugate_moreau");
  check_dim(x, f.dim, "prox_conjugate_moreau");
  return x - gamma * f.prox(x / gamma, 1.0 / gamma);
}

}  // namespace blocksplit
