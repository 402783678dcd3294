// blocksplit - block-activated proximal splitting solvers
// Copyright 2026 The blocksplit authors
// Licensed under Apache 2.0

#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "blocksplit/problem.hpp"
#include "blocksplit/projector.hpp"
#include "blocksplit/schedule.hpp"
#include "blocksplit/trace.hpp"

namespace blocksplit {

/// Which side's activated-block count drives the epoch metric.
enum class EpochMode { primal, dual };

/// Configuration of the randomly block-activated primal-dual Douglas-Rachford
/// iteration. A single proximal scale gamma serves all blocks; the relaxation
/// schedule must stay within ]0, 2[ with positive infimum and supremum < 2.
struct DRConfig {
  ActivationPlan plan;
  double gamma = 1.0;
  std::function<double(std::int64_t)> lambda = [](std::int64_t) { return 1.5; };
  std::int64_t max_iterations = 10000;
  double stop_tolerance = 0.0;  // 0 disables the residual stop
  double epoch_budget = std::numeric_limits<double>::infinity();
  EpochMode epoch_mode = EpochMode::primal;
  std::int64_t metrics_stride = 1;  // evaluate metrics every S iterations
  double kt_gamma = 1.0;            // scales of the residual certificate
  double kt_mu = 1.0;
};

/// Iterate state: (x, z) in H, (w, y) in G. Blocks outside the activated
/// sets are carried over bitwise-unchanged between iterations.
struct DRState {
  BlockVector x;
  BlockVector z;
  BlockVector w;
  BlockVector y;
  std::int64_t n = 0;
};

struct DRRunResult {
  DRState state;
  std::vector<TraceRecord> trace;
  StopReason reason = StopReason::max_iterations;
  std::int64_t iterations = 0;
};

/// Douglas-Rachford solver over the graph subspace V = {(z, Lz)}.
///
/// Each iteration projects the full (z, y) onto V, then relaxes the selected
/// primal blocks through prox_{gamma f_i} and the selected dual blocks
/// through prox_{gamma g_k}; unselected blocks are copied. The subspace
/// projector is built once at construction.
class DRSolver {
 public:
  DRSolver(ProblemSpecPtr spec, DRConfig config);

  const DRState& state() const { return state_; }
  /// Warm start; dimensions must match the spec.
  void set_state(DRState state);

  /// One iteration; returns the activated block sets.
  BlockSelection step();

  /// Iterates until the residual stop, the epoch budget, or the iteration
  /// cap. Metrics are evaluated every `metrics_stride` iterations (and at
  /// iteration 0); `error_metric` fills TraceRecord::error_db when given.
  DRRunResult run(const TraceSink& sink = {}, const ErrorMetric& error_metric = {});

  const SubspaceProjector& projector() const { return projector_; }
  /// Cumulative linear-operator work, including the one-time projector setup.
  std::uint64_t cumulative_macs() const { return macs_.macs; }
  double epochs_elapsed() const { return epochs_.epochs_elapsed(); }

  /// KT pair certified by the projection (t, u) of the current (z, y):
  /// x-hat = t and v-hat* = (u - y) / gamma. Converges to a Kuhn-Tucker pair
  /// together with the iterate sequence.
  KTPoint kt_point_from_projection(const BlockVector& t, const BlockVector& u) const;

 private:
  double lambda_at(std::int64_t n) const;
  BlockSelection step_with_projection(const BlockVector& t, const BlockVector& u);

  ProblemSpecPtr spec_;
  DRConfig config_;
  SubspaceProjector projector_;
  DRState state_;
  MacCounter macs_;
  EpochCounter epochs_;
};

}  // namespace blocksplit
