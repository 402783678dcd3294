// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#pragma once

#include <Eigen/Core>
#include <functional>
#include <limits>

namespace blocksplit {

inline constexpr double kPlusInfinity = std::numeric_limits<double>::infinity();

/// A proper lower semicontinuous convex function exposed through evaluation
/// and its proximity operator.
///
/// `eval(x)` returns the extended-real value (may be +inf), `prox(x, gamma)`
/// returns the unique minimizer of u -> f(u) + ||u - x||^2 / (2 gamma).
struct ProxFunction {
  Eigen::Index dim = 0;
  std::function<double(const Eigen::VectorXd&)> eval;
  std::function<Eigen::VectorXd(const Eigen::VectorXd&, double)> prox;
};

/// f = 0; the prox is the identity for all gamma.
ProxFunction prox_zero(Eigen::Index dim);

/// f = tau * ||.||_2. Requires tau > 0.
ProxFunction prox_scaled_l2_norm(double tau, Eigen::Index dim);

/// Scalar hinge g: xi -> max{0, 1 - beta * xi}. Requires beta != 0.
ProxFunction prox_hinge(double beta);

/// Indicator of the box [lo, hi]^dim; the prox is a coordinatewise clamp,
/// independent of gamma. Requires lo < hi.
ProxFunction prox_box_indicator(double lo, double hi, Eigen::Index dim);

/// g = alpha * ||. - b||_2. Requires alpha > 0.
ProxFunction prox_scaled_l2_distance(double alpha, Eigen::VectorXd b);

/// g = alpha * ||. - c||_2^2. Requires alpha > 0.
ProxFunction prox_scaled_sq_l2(double alpha, Eigen::VectorXd c);

/// g = ||.||_{1,2} over pairs: for input y of dimension 2 * pair_count the
/// j-th pair is (y[j], y[pair_count + j]) (first-half / second-half layout),
/// and g(y) is the sum of the pair Euclidean norms. The prox soft-thresholds
/// each pair by gamma.
ProxFunction prox_l12_pairs(Eigen::Index pair_count);

/// prox of the conjugate via the Moreau identity:
/// prox_{gamma f*}(x) = x - gamma * prox_{f / gamma}(x / gamma).
Eigen::VectorXd prox_conjugate_moreau(const ProxFunction& f, const Eigen::VectorXd& x,
                                      double gamma);

}  // namespace blocksplit
