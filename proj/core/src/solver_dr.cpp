// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#include "blocksplit/solver_dr.hpp"

#include <chrono>
#include <cmath>

#include "blocksplit/errors.hpp"

namespace blocksplit {

const char* to_string(StopReason r) {
  switch (r) {
    case StopReason::max_iterations:
      return "max_iterations";
    case StopReason::tolerance_reached:
      return "tolerance_reached";
    case StopReason::epoch_budget:
      return "epoch_budget";
    case StopReason::stationary:
      return "stationary";
  }
  return "unknown";
}

DRSolver::DRSolver(ProblemSpecPtr spec, DRConfig config)
    : spec_(std::move(spec)),
      config_(std::move(config)),
      projector_(spec_->grid()),
      epochs_(config_.epoch_mode == EpochMode::primal ? spec_->m() : spec_->p()) {
  detail::require(spec_ != nullptr, "DRSolver: null spec");
  detail::require(config_.gamma > 0.0 && std::isfinite(config_.gamma),
                  "DRSolver: gamma must be positive");
  detail::require(static_cast<bool>(config_.lambda), "DRSolver: missing lambda schedule");
  detail::require(config_.plan.m() == spec_->m() && config_.plan.p() == spec_->p(),
                  "DRSolver: activation plan shape does not match the problem");
  detail::require(config_.max_iterations >= 0, "DRSolver: negative iteration cap");
  detail::require(config_.metrics_stride >= 1, "DRSolver: metrics_stride must be >= 1");
  lambda_at(0);  // validate the first relaxation value eagerly
  state_.x = spec_->zero_h();
  state_.z = spec_->zero_h();
  state_.w = spec_->zero_g();
  state_.y = spec_->zero_g();
  state_.n = 0;
  macs_.add(projector_.setup_macs());
}

void DRSolver::set_state(DRState state) {
  detail::require(state.x.dims() == spec_->h_dims() && state.z.dims() == spec_->h_dims() &&
                      state.w.dims() == spec_->g_dims() && state.y.dims() == spec_->g_dims(),
                  "DRSolver::set_state: dimension mismatch");
  state_ = std::move(state);
}

double DRSolver::lambda_at(std::int64_t n) const {
  const double l = config_.lambda(n);
  detail::require(l > 0.0 && l < 2.0, "DRSolver: lambda_n must lie in ]0, 2[");
  return l;
}

KTPoint DRSolver::kt_point_from_projection(const BlockVector& t, const BlockVector& u) const {
  KTPoint pt;
  pt.x = t;
  pt.v_star = u;
  pt.v_star -= state_.y;
  pt.v_star *= 1.0 / config_.gamma;
  return pt;
}

BlockSelection DRSolver::step_with_projection(const BlockVector& t, const BlockVector& u) {
  const BlockSelection sel = config_.plan.next_blocks(state_.n);
  if (sel.primal.empty() || (spec_->p() > 0 && sel.dual.empty())) {
    throw plan_violation("DRSolver: activation plan returned an empty block set");
  }
  const double lambda = lambda_at(state_.n);
  const double gamma = config_.gamma;

  for (Eigen::Index i : sel.primal) {
    const Eigen::VectorXd& ti = t.block(i);
    Eigen::VectorXd& zi = state_.z.block(i);
    const Eigen::VectorXd reflected = 2.0 * ti - zi;
    zi += lambda * (spec_->f(i).prox(reflected, gamma) - ti);
    state_.x.block(i) = ti;
  }
  for (Eigen::Index k : sel.dual) {
    const Eigen::VectorXd& uk = u.block(k);
    Eigen::VectorXd& yk = state_.y.block(k);
    const Eigen::VectorXd reflected = 2.0 * uk - yk;
    yk += lambda * (spec_->g(k).prox(reflected, gamma) - uk);
    state_.w.block(k) = uk;
  }

  epochs_.record_activation(config_.epoch_mode == EpochMode::primal
                                ? static_cast<Eigen::Index>(sel.primal.size())
                                : static_cast<Eigen::Index>(sel.dual.size()));
  ++state_.n;
  return sel;
}

BlockSelection DRSolver::step() {
  auto [t, u] = projector_.project(state_.z, state_.y, &macs_);
  return step_with_projection(t, u);
}

DRRunResult DRSolver::run(const TraceSink& sink, const ErrorMetric& error_metric) {
  DRRunResult result;
  const auto start = std::chrono::steady_clock::now();
  auto wall_ms = [&start]() {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  };

  StopReason reason = StopReason::max_iterations;
  std::int64_t n = 0;
  for (; n < config_.max_iterations; ++n) {
    auto [t, u] = projector_.project(state_.z, state_.y, &macs_);

    // Metrics describe the current iterate, before it is advanced; the KT
    // certificate comes from the same projection the step consumes.
    if (n % config_.metrics_stride == 0) {
      const KTPoint cert = kt_point_from_projection(t, u);
      TraceRecord rec;
      rec.iteration = n;
      rec.epochs = epochs_.epochs_elapsed();
      rec.error_db =
          error_metric ? error_metric(state_.x) : std::numeric_limits<double>::quiet_NaN();
      rec.objective = objective_value(*spec_, state_.x);
      rec.kt_residual = kt_residual(*spec_, cert, config_.kt_gamma, config_.kt_mu);
      rec.activated_primal = config_.plan.primal_count_per_iteration();
      rec.activated_dual = config_.plan.dual_count_per_iteration();
      rec.wall_ms = wall_ms();
      rec.macs = macs_.macs;
      if (!std::isfinite(rec.kt_residual)) {
        throw numerical_error("DRSolver: non-finite KT residual");
      }
      result.trace.push_back(rec);
      if (sink) sink(rec);
      if (config_.stop_tolerance > 0.0 && rec.kt_residual <= config_.stop_tolerance) {
        reason = StopReason::tolerance_reached;
        break;
      }
    }
    if (epochs_.epochs_elapsed() >= config_.epoch_budget) {
      reason = StopReason::epoch_budget;
      break;
    }
    step_with_projection(t, u);
  }

  result.state = state_;
  result.reason = reason;
  result.iterations = n;
  return result;
}

}  // namespace blocksplit
