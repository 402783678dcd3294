// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#include "blocksplit/solver_ps.hpp"

#include <chrono>
#include <cmath>

#include "blocksplit/errors.hpp"

namespace blocksplit {

std::vector<double> PSConfig::uniform(double value, Eigen::Index count) {
  return std::vector<double>(static_cast<std::size_t>(count), value);
}

PSSolver::PSSolver(ProblemSpecPtr spec, PSConfig config)
    : spec_(std::move(spec)),
      config_(std::move(config)),
      epochs_(config_.epoch_mode == EpochMode::primal ? spec_->m() : spec_->p()) {
  detail::require(spec_ != nullptr, "PSSolver: null spec");
  if (config_.gamma.empty()) config_.gamma = PSConfig::uniform(1.0, spec_->m());
  if (config_.mu.empty()) config_.mu = PSConfig::uniform(1.0, spec_->p());
  detail::require(static_cast<Eigen::Index>(config_.gamma.size()) == spec_->m(),
                  "PSSolver: gamma must have one entry per primal block");
  detail::require(static_cast<Eigen::Index>(config_.mu.size()) == spec_->p(),
                  "PSSolver: mu must have one entry per coupling block");
  for (double g : config_.gamma)
    detail::require(g > 0.0 && std::isfinite(g), "PSSolver: gamma_i must be positive");
  for (double m : config_.mu)
    detail::require(m > 0.0 && std::isfinite(m), "PSSolver: mu_k must be positive");
  detail::require(static_cast<bool>(config_.lambda), "PSSolver: missing lambda schedule");
  detail::require(config_.plan.m() == spec_->m() && config_.plan.p() == spec_->p(),
                  "PSSolver: activation plan shape does not match the problem");
  detail::require(config_.max_iterations >= 0, "PSSolver: negative iteration cap");
  detail::require(config_.metrics_stride >= 1, "PSSolver: metrics_stride must be >= 1");
  lambda_at(0);
  state_.x = spec_->zero_h();
  state_.v_star = spec_->zero_g();
  state_.a = spec_->zero_h();
  state_.a_star = spec_->zero_h();
  state_.b = spec_->zero_g();
  state_.b_star = spec_->zero_g();
  state_.n = 0;
}

void PSSolver::set_start(BlockVector x, BlockVector v_star) {
  detail::require(x.dims() == spec_->h_dims() && v_star.dims() == spec_->g_dims(),
                  "PSSolver::set_start: dimension mismatch");
  detail::require(state_.n == 0, "PSSolver::set_start: solver already started");
  state_.x = std::move(x);
  state_.v_star = std::move(v_star);
}

double PSSolver::lambda_at(std::int64_t n) const {
  const double l = config_.lambda(n);
  detail::require(l > 0.0 && l < 2.0, "PSSolver: lambda_n must lie in ]0, 2[");
  return l;
}

PSStepReport PSSolver::step() {
  // Iteration 0 activates every block so all caches are populated.
  BlockSelection sel;
  if (state_.n == 0) {
    sel = ActivationPlan::full(spec_->m(), spec_->p()).next_blocks(0);
  } else {
    sel = config_.plan.next_blocks(state_.n);
  }
  if (sel.primal.empty() || (spec_->p() > 0 && sel.dual.empty())) {
    throw plan_violation("PSSolver: activation plan returned an empty block set");
  }
  const double lambda = lambda_at(state_.n);

  // Selected primal blocks: x*_i = x_i - gamma_i sum_k L*_{k,i} v*_k, then
  // the prox split a_i + gamma_i a*_i = x*_i.
  for (Eigen::Index i : sel.primal) {
    const double gi = config_.gamma[static_cast<std::size_t>(i)];
    const Eigen::VectorXd x_star =
        state_.x.block(i) - gi * spec_->grid().apply_adjoint_col(i, state_.v_star, &macs_);
    state_.a.block(i) = spec_->f(i).prox(x_star, gi);
    state_.a_star.block(i) = (x_star - state_.a.block(i)) / gi;
  }
  // Selected coupling blocks: y*_k = mu_k v*_k + sum_i L_{k,i} x_i, then the
  // prox split b_k + mu_k b*_k = y*_k.
  for (Eigen::Index k : sel.dual) {
    const double mk = config_.mu[static_cast<std::size_t>(k)];
    const Eigen::VectorXd y_star =
        mk * state_.v_star.block(k) + spec_->grid().apply_row(k, state_.x, &macs_);
    state_.b.block(k) = spec_->g(k).prox(y_star, mk);
    state_.b_star.block(k) = (y_star - state_.b.block(k)) / mk;
  }

  PSStepReport report;
  // t_k = b_k - sum_i L_{k,i} a_i is refreshed for every k, selected or not;
  // t*_i = a*_i + sum_k L*_{k,i} b*_k likewise for every i.
  report.t = state_.b;
  report.t -= spec_->grid().apply(state_.a, &macs_);
  report.t_star = state_.a_star;
  report.t_star += spec_->grid().apply_adjoint(state_.b_star, &macs_);

  report.tau = report.t_star.squared_norm() + report.t.squared_norm();
  if (!std::isfinite(report.tau)) {
    throw numerical_error("PSSolver: non-finite separator norm");
  }
  if (report.tau > 0.0) {
    report.pi = state_.x.dot(report.t_star) - state_.a.dot(state_.a_star) +
                report.t.dot(state_.v_star) - state_.b.dot(state_.b_star);
    if (!std::isfinite(report.pi)) {
      throw numerical_error("PSSolver: non-finite separator offset");
    }
  }
  if (report.tau > 0.0 && report.pi > 0.0) {
    report.theta = lambda * report.pi / report.tau;
    report.updated = true;
    state_.x -= report.theta * report.t_star;
    state_.v_star -= report.theta * report.t;
  }

  epochs_.record_activation(config_.epoch_mode == EpochMode::primal
                                ? static_cast<Eigen::Index>(sel.primal.size())
                                : static_cast<Eigen::Index>(sel.dual.size()));
  ++state_.n;
  return report;
}

PSRunResult PSSolver::run(const TraceSink& sink, const ErrorMetric& error_metric) {
  PSRunResult result;
  const auto start = std::chrono::steady_clock::now();
  auto wall_ms = [&start]() {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  };

  StopReason reason = StopReason::max_iterations;
  std::int64_t n = 0;
  for (; n < config_.max_iterations; ++n) {
    if (n % config_.metrics_stride == 0) {
      TraceRecord rec;
      rec.iteration = n;
      rec.epochs = epochs_.epochs_elapsed();
      rec.error_db =
          error_metric ? error_metric(state_.x) : std::numeric_limits<double>::quiet_NaN();
      rec.objective = objective_value(*spec_, state_.x);
      rec.kt_residual = kt_residual(*spec_, KTPoint{state_.x, state_.v_star},
                                    config_.kt_gamma, config_.kt_mu);
      rec.activated_primal = (n == 0) ? spec_->m() : config_.plan.primal_count_per_iteration();
      rec.activated_dual = (n == 0) ? spec_->p() : config_.plan.dual_count_per_iteration();
      rec.wall_ms = wall_ms();
      rec.macs = macs_.macs;
      if (!std::isfinite(rec.kt_residual)) {
        throw numerical_error("PSSolver: non-finite KT residual");
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
    const PSStepReport report = step();
    if (report.updated) {
      consecutive_holds_ = 0;
    } else {
      ++consecutive_holds_;
      if (config_.stationary_after_holds > 0 &&
          consecutive_holds_ >= config_.stationary_after_holds) {
        ++n;
        reason = StopReason::stationary;
        break;
      }
    }
  }

  result.state = state_;
  result.reason = reason;
  result.iterations = n;
  return result;
}

}  // namespace blocksplit
