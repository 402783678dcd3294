// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#pragma once

#include <functional>
#include <memory>
#include <vector>

#include "blocksplit/problem.hpp"
#include "blocksplit/schedule.hpp"
#include "blocksplit/solver_dr.hpp"  // EpochMode
#include "blocksplit/trace.hpp"

namespace blocksplit {

/// Configuration of the deterministic block-activated primal-dual projective
/// splitting iteration. Each primal block carries its own scale gamma_i and
/// each coupling block its own mu_k.
struct PSConfig {
  ActivationPlan plan;
  std::vector<double> gamma;  // size m; broadcast helpers below
  std::vector<double> mu;     // size p
  std::function<double(std::int64_t)> lambda = [](std::int64_t) { return 1.9; };
  std::int64_t max_iterations = 10000;
  double stop_tolerance = 0.0;
  double epoch_budget = std::numeric_limits<double>::infinity();
  EpochMode epoch_mode = EpochMode::primal;
  std::int64_t metrics_stride = 1;
  double kt_gamma = 1.0;
  double kt_mu = 1.0;
  /// If nonzero, stop as `stationary` after this many consecutive held
  /// iterations with an unchanged state (the iteration has reached its
  /// numerical floor). 0 disables the check.
  std::int64_t stationary_after_holds = 0;

  static std::vector<double> uniform(double value, Eigen::Index count);
};

/// Iterate state (x, v*) plus the proximal caches (a_i, a*_i) and
/// (b_k, b*_k). Caches of unselected blocks carry the values from their last
/// activation; iteration 0 activates everything, so all caches start filled.
struct PSState {
  BlockVector x;        // H
  BlockVector v_star;   // G
  BlockVector a;        // H
  BlockVector a_star;   // H
  BlockVector b;        // G
  BlockVector b_star;   // G
  std::int64_t n = 0;
};

/// Outcome of one ps_step: the separator statistics tau, pi, the applied
/// step theta = lambda * pi / tau (0 when held), and the directions (t*, t).
struct PSStepReport {
  double tau = 0.0;
  double pi = 0.0;
  double theta = 0.0;
  bool updated = false;
  BlockVector t_star;  // H, gradient of the separator in x
  BlockVector t;       // G, gradient of the separator in v*
};

struct PSRunResult {
  PSState state;
  std::vector<TraceRecord> trace;
  StopReason reason = StopReason::max_iterations;
  std::int64_t iterations = 0;
};

/// Projective splitting solver; activates blocks deterministically and
/// projects onto separating hyperplanes built from the proximal caches.
/// Iteration 0 always activates every block regardless of the plan.
class PSSolver {
 public:
  PSSolver(ProblemSpecPtr spec, PSConfig config);

  const PSState& state() const { return state_; }
  /// Warm start for (x, v*); caches are refilled at the next (full) step.
  void set_start(BlockVector x, BlockVector v_star);

  PSStepReport step();

  PSRunResult run(const TraceSink& sink = {}, const ErrorMetric& error_metric = {});

  std::uint64_t cumulative_macs() const { return macs_.macs; }
  double epochs_elapsed() const { return epochs_.epochs_elapsed(); }

 private:
  double lambda_at(std::int64_t n) const;

  ProblemSpecPtr spec_;
  PSConfig config_;
  PSState state_;
  MacCounter macs_;
  EpochCounter epochs_;
  std::int64_t consecutive_holds_ = 0;
};

}  // namespace blocksplit
